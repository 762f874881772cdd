"""Coefficient sequences and their Mobius-inversion pairing with f(m).

A sequence a_1..a_N and the function f(m) = sum of a_d over divisors d of
m determine each other; this module holds both directions of that
transform plus the construction of completely multiplicative functions
from their values on primes.

Index convention used package-wide: arithmetic arrays are "index
aligned", meaning arr[m] is the value at the integer m and arr[0] is an
unused zero slot. This keeps every divisor loop and prefix lookup free of
off-by-one shifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SpecFormatError
from .sieve import SieveTable

BUILTIN_SEQUENCES = ("mu", "unit", "one", "liouville", "inverse-squares")

_BOUND_SLACK = 1e-12


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def log_index(n: int) -> np.ndarray:
    """Index-aligned array of log m for m = 1..n (log 1 = 0, slot 0 = 0)."""
    out = np.zeros(n + 1, dtype=np.float64)
    if n >= 1:
        out[1:] = np.log(np.arange(1, n + 1, dtype=np.float64))
    return out


@dataclass(frozen=True)
class CoefficientSequence:
    """A finite prefix of complex coefficients a_1..a_N with prefix sums.

    Attributes:
        length: N, the number of stored coefficients.
        a: index-aligned complex array of the coefficients (a[0] == 0).
        prefix_a: prefix_a[k] = a_1 + ... + a_k.
        prefix_alog: prefix_alog[k] = sum of a_j log j for j <= k. The
            j = 1 term never contributes because log 1 = 0.
    """

    length: int
    a: np.ndarray
    prefix_a: np.ndarray
    prefix_alog: np.ndarray

    @classmethod
    def from_values(cls, values) -> "CoefficientSequence":
        """Build from the natural list [a_1, a_2, ...]."""
        vals = np.asarray(values, dtype=np.complex128)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("coefficient list must be non-empty and one-dimensional")
        a = np.zeros(vals.size + 1, dtype=np.complex128)
        a[1:] = vals
        return cls.from_index_aligned(a)

    @classmethod
    def from_index_aligned(cls, a: np.ndarray) -> "CoefficientSequence":
        """Build from an index-aligned array (slot 0 ignored)."""
        a = np.array(a, dtype=np.complex128)
        if a.ndim != 1 or a.size < 2:
            raise ValueError("index-aligned array must cover at least m = 1")
        a[0] = 0
        prefix_a = np.cumsum(a)
        prefix_alog = np.cumsum(a * log_index(a.size - 1))
        for arr in (a, prefix_a, prefix_alog):
            arr.flags.writeable = False
        return cls(a.size - 1, a, prefix_a, prefix_alog)

    def values(self) -> np.ndarray:
        """The natural view [a_1, ..., a_N]."""
        return self.a[1:]


@dataclass(frozen=True)
class MultiplicativeSpec:
    """A completely multiplicative function given by its prime values.

    f(p) = prime_values[p] when present, else ``default``, for primes up
    to ``cutoff``; every prime above the cutoff has f(p) = 1, which makes
    truncated Euler products exact for the function they describe.

    ``bound_check`` enforces |f(p)| <= 1 (the hypothesis of the mean-value
    bound); switch it off deliberately to experiment outside that class.
    """

    prime_values: dict[int, complex] = field(default_factory=dict)
    cutoff: int = 1
    default: complex = 1.0 + 0j
    bound_check: bool = True

    def __post_init__(self):
        if self.cutoff < 1:
            raise SpecFormatError(f"cutoff must be >= 1, got {self.cutoff}")
        clean: dict[int, complex] = {}
        for p, v in self.prime_values.items():
            p = int(p)
            if not _is_prime(p):
                raise SpecFormatError(f"primes[{p}]: key is not prime")
            if p > self.cutoff:
                raise SpecFormatError(f"primes[{p}]: key exceeds cutoff {self.cutoff}")
            clean[p] = complex(v)
        object.__setattr__(self, "prime_values", clean)
        object.__setattr__(self, "default", complex(self.default))
        if self.bound_check:
            if abs(self.default) > 1 + _BOUND_SLACK:
                raise SpecFormatError(
                    f"default: |f(p)| = {abs(self.default)} exceeds 1 with bound_check on"
                )
            for p, v in clean.items():
                if abs(v) > 1 + _BOUND_SLACK:
                    raise SpecFormatError(
                        f"primes[{p}]: |f({p})| = {abs(v)} exceeds 1 with bound_check on"
                    )

    def value_at(self, p: int) -> complex:
        """f(p) for a prime p, honoring the cutoff convention."""
        if p > self.cutoff:
            return 1.0 + 0j
        return self.prime_values.get(p, self.default)


def sum_over_divisors(values: np.ndarray) -> np.ndarray:
    """Divisor-lattice transform: out[m] = sum of values[d] over d | m.

    One pass over the stored indices with a strided slice-add per nonzero
    entry, O(N log N) total work; zero coefficients cost nothing.
    """
    values = np.asarray(values)
    n = values.size - 1
    out = np.zeros(n + 1, dtype=np.complex128)
    for d in np.nonzero(values)[0].tolist():
        if d >= 1:
            out[d::d] += values[d]
    return out


def f_from_a(table: SieveTable, seq: CoefficientSequence) -> np.ndarray:
    """f(m) = sum of a_d over d | m, index-aligned up to seq.length."""
    if seq.length > table.limit:
        raise ValueError(
            f"sequence length {seq.length} exceeds sieve limit {table.limit}"
        )
    return sum_over_divisors(seq.a)


def a_from_f(table: SieveTable, f: np.ndarray) -> CoefficientSequence:
    """Invert ``f_from_a``: a_m = sum of mu(m/d) f(d) over d | m.

    Implemented as the mu-weighted lattice pass a[e q] += mu(e) f(q),
    which round-trips with :func:`f_from_a` to machine precision.
    """
    f = np.asarray(f, dtype=np.complex128)
    n = f.size - 1
    if n > table.limit:
        raise ValueError(f"array length {n} exceeds sieve limit {table.limit}")
    if n < 1:
        raise ValueError("index-aligned array must cover at least m = 1")
    mu = table.mobius_array
    out = np.zeros(n + 1, dtype=np.complex128)
    for e in np.nonzero(mu[: n + 1])[0].tolist():
        out[e::e] += int(mu[e]) * f[1 : n // e + 1]
    return CoefficientSequence.from_index_aligned(out)


def extend_completely_multiplicative(
    spec: MultiplicativeSpec, table: SieveTable, n: int
) -> np.ndarray:
    """Index-aligned array of f(1)..f(n) for a completely multiplicative f.

    f(m) is the product of f(p)^(v_p(m)) over the factorization of m.
    Primes with f(p) = 1 (including everything above the cutoff) are
    skipped exactly, so the result is bit-stable under cutoff changes
    that only touch such primes.
    """
    if n > table.limit:
        raise ValueError(f"extension length {n} exceeds sieve limit {table.limit}")
    f = np.ones(n + 1, dtype=np.complex128)
    f[0] = 0
    top = min(n, spec.cutoff)
    if spec.default == 1 and not spec.prime_values:
        return f
    if spec.default == 1:
        candidates = [p for p in sorted(spec.prime_values) if p <= top]
    else:
        candidates = table.primes[table.primes <= top].tolist()
    for p in candidates:
        fp = spec.value_at(p)
        if fp == 1:
            continue
        pk = p
        while pk <= n:
            f[pk::pk] *= fp
            pk *= p
    return f


def named_sequence(name: str, n: int, table: SieveTable) -> CoefficientSequence:
    """Built-in coefficient sequences of length n, by name.

    mu: a_k = mu(k); unit: a_1 = 1 and nothing else; one: a_k = 1;
    liouville: a_k = lambda(k) = (-1)^Omega(k); inverse-squares:
    a_k = k^-2.
    """
    if n < 1 or n > table.limit:
        raise ValueError(f"length {n} outside [1, {table.limit}]")
    if name == "mu":
        vals = table.mobius_array[1 : n + 1].astype(np.complex128)
    elif name == "unit":
        vals = np.zeros(n, dtype=np.complex128)
        vals[0] = 1
    elif name == "one":
        vals = np.ones(n, dtype=np.complex128)
    elif name == "liouville":
        spec = MultiplicativeSpec(cutoff=n, default=-1.0)
        vals = extend_completely_multiplicative(spec, table, n)[1:]
    elif name == "inverse-squares":
        vals = (np.arange(1, n + 1, dtype=np.float64) ** -2.0).astype(np.complex128)
    else:
        raise SpecFormatError(
            f"unknown sequence {name!r}; expected one of {', '.join(BUILTIN_SEQUENCES)}"
        )
    return CoefficientSequence.from_values(vals)
