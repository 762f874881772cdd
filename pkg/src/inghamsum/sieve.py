"""Sieve-backed arithmetic functions.

A single smallest-prime-factor (SPF) table drives everything downstream:
factorization, the Mobius function mu(m), the von Mangoldt function
Lambda(m), the Chebyshev function Psi(x), divisor enumeration and partial
sums of mu(d)/d. Derived arrays are built lazily and cached on the table,
so the cost of e.g. a Psi prefix array is paid once even when a
verification grid issues thousands of queries.

The table is immutable after construction (the backing arrays are marked
read-only) and safe to share between threads.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import CapacityError

# Default cap keeps the int64 SPF array around 0.8 GB.
DEFAULT_CAPACITY = 100_000_000


class SieveTable:
    """Smallest-prime-factor table up to ``limit`` with derived arrays.

    Attributes:
        limit: Largest integer covered by the table.
        spf: int64 array, spf[m] = smallest prime factor of m (m >= 2).
        primes: ascending int64 array of all primes <= limit.
    """

    __slots__ = (
        "limit",
        "spf",
        "primes",
        "_mobius_arr",
        "_mangoldt_arr",
        "_psi_prefix",
        "_mu_over_d_prefix",
    )

    def __init__(self, limit: int, spf: np.ndarray, primes: np.ndarray):
        self.limit = limit
        self.spf = spf
        self.primes = primes
        self._mobius_arr = None
        self._mangoldt_arr = None
        self._psi_prefix = None
        self._mu_over_d_prefix = None

    # -- derived arrays (lazy, cached) ----------------------------------

    @property
    def mobius_array(self) -> np.ndarray:
        """int8 array with mobius_array[m] = mu(m); index 0 is unused."""
        if self._mobius_arr is None:
            mu = np.ones(self.limit + 1, dtype=np.int8)
            mu[0] = 0
            for p in self.primes.tolist():
                mu[p::p] *= -1
                sq = p * p
                if sq <= self.limit:
                    mu[sq::sq] = 0
            mu.flags.writeable = False
            self._mobius_arr = mu
        return self._mobius_arr

    @property
    def mangoldt_array(self) -> np.ndarray:
        """float64 array with mangoldt_array[m] = Lambda(m)."""
        if self._mangoldt_arr is None:
            lam = np.zeros(self.limit + 1, dtype=np.float64)
            if len(self.primes):
                lam[self.primes] = np.log(self.primes.astype(np.float64))
                root = math.isqrt(self.limit)
                for p in self.primes[self.primes <= root].tolist():
                    logp = math.log(p)
                    pk = p * p
                    while pk <= self.limit:
                        lam[pk] = logp
                        pk *= p
            lam.flags.writeable = False
            self._mangoldt_arr = lam
        return self._mangoldt_arr

    @property
    def psi_prefix(self) -> np.ndarray:
        """float64 array with psi_prefix[m] = Psi(m) = sum_{j<=m} Lambda(j)."""
        if self._psi_prefix is None:
            pref = np.cumsum(self.mangoldt_array)
            pref.flags.writeable = False
            self._psi_prefix = pref
        return self._psi_prefix

    # -- scalar arithmetic functions ------------------------------------

    def _check_index(self, m: int) -> None:
        if not 1 <= m <= self.limit:
            raise ValueError(f"index {m} outside table range [1, {self.limit}]")

    def factorize(self, m: int) -> list[tuple[int, int]]:
        """Prime factorization of m as ascending (prime, exponent) pairs."""
        self._check_index(m)
        spf = self.spf
        out: list[tuple[int, int]] = []
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        return out

    def distinct_primes(self, m: int) -> list[int]:
        """Ascending list of distinct prime divisors of m."""
        self._check_index(m)
        spf = self.spf
        out: list[int] = []
        while m > 1:
            p = int(spf[m])
            out.append(p)
            while m % p == 0:
                m //= p
        return out

    def mobius(self, m: int) -> int:
        """mu(m): (-1)^k for squarefree m with k prime factors, else 0."""
        self._check_index(m)
        spf = self.spf
        sign = 1
        while m > 1:
            p = int(spf[m])
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        return sign

    def mangoldt(self, m: int) -> float:
        """Lambda(m): log p when m is a prime power p^k, else 0."""
        self._check_index(m)
        if m == 1:
            return 0.0
        p = int(self.spf[m])
        while m % p == 0:
            m //= p
        return math.log(p) if m == 1 else 0.0

    def chebyshev_psi(self, x: float) -> float:
        """Psi(x) = sum of Lambda(m) over m <= x, for 0 <= x <= limit."""
        if x < 0 or x > self.limit:
            raise ValueError(f"argument {x} outside [0, {self.limit}]")
        return float(self.psi_prefix[int(math.floor(x))])

    def delta(self, x: float, y: float) -> float:
        """Psi(y) - Psi(x) - (y - x), the prime-count deviation on [x, y]."""
        if x > y:
            raise ValueError(f"need x <= y, got x={x}, y={y}")
        return self.chebyshev_psi(y) - self.chebyshev_psi(x) - (y - x)

    def mu_over_d_partial(self, x: int) -> float:
        """Partial sum of mu(d)/d over d <= x."""
        self._check_index(x)
        if self._mu_over_d_prefix is None:
            d = np.arange(self.limit + 1, dtype=np.float64)
            d[0] = 1.0
            pref = np.cumsum(self.mobius_array / d)
            pref.flags.writeable = False
            self._mu_over_d_prefix = pref
        return float(self._mu_over_d_prefix[x])

    def divisors(self, m: int) -> list[int]:
        """All divisors of m in ascending order."""
        divs = [1]
        for p, e in self.factorize(m):
            pk = 1
            extend = []
            for _ in range(e):
                pk *= p
                extend.extend(d * pk for d in divs)
            divs.extend(extend)
        divs.sort()
        return divs

    def is_prime(self, m: int) -> bool:
        self._check_index(m)
        return m >= 2 and int(self.spf[m]) == m

    def __repr__(self) -> str:  # pragma: no cover
        return f"SieveTable(limit={self.limit}, primes={len(self.primes)})"


def build_sieve(limit: int, max_limit: int = DEFAULT_CAPACITY) -> SieveTable:
    """Build a :class:`SieveTable` covering 2..limit.

    Uses a vectorized Eratosthenes-style pass that records the smallest
    prime factor of every composite; survivors are prime. Raises
    :class:`CapacityError` outside [2, max_limit].
    """
    if limit < 2 or limit > max_limit:
        raise CapacityError(f"sieve limit {limit} outside [2, {max_limit}]")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    idx = np.arange(limit + 1, dtype=np.int64)
    unmarked = (spf == 0) & (idx >= 2)
    spf[unmarked] = idx[unmarked]
    primes = np.nonzero((spf == idx) & (idx >= 2))[0].astype(np.int64)
    spf.flags.writeable = False
    primes.flags.writeable = False
    return SieveTable(limit, spf, primes)
