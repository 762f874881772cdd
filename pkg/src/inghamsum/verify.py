"""Theorem and identity verification harnesses.

Asymptotic statements cannot be decided at finite n, so the checks here
operationalize o(.) conditions as trends: the last grid point must fall
below a configured threshold and the magnitudes must be nonincreasing
over the final half of a geometric grid. Exact identities, by contrast,
are checked by computing both sides through independent code paths and
reporting the worst absolute discrepancy; failures there indicate
implementation bugs, not analytic slack.

Frozen empirical envelopes (module constants below) were fixed from an
oracle run over the reference grids; the suites assert that the measured
ratios never exceed them.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .accumulate import csum, rsum
from .dirichlet import (
    EvalParams,
    euler_product,
    f_t_table,
    ft_partial_sum,
    g_eval,
    mu_n_alpha,
    zeta_real,
    zeta_tail,
    _prime_deviation_sum,
)
from .quadrature import integral_sigma_to_inf, integral_zero_to_inf
from .report import ReportRow, VerificationReport
from .sequences import (
    CoefficientSequence,
    MultiplicativeSpec,
    a_from_f,
    extend_completely_multiplicative,
    log_index,
    sum_over_divisors,
)
from .sieve import SieveTable
from .summation import _block_sum, batch_sums, ingham_A, ingham_S

# Empirical envelope for the five f_t estimate families; the measured
# suprema over the reference grid stay below 1.1 (see the acceptance
# suite, which records them), so 5 leaves a wide deterministic margin.
LEMMA_ENVELOPE = 5.0
LEMMA_T_GRID = (1e-3, 1e-2, 1e-1, 1.0, 10.0)
LEMMA_X_GRID = (100, 1_000, 10_000, 100_000, 1_000_000)
LEMMA_K_GRID = (2, 10, 100)
LEMMA_VX_GRID = (1_000, 10_000)

# Frozen from the oracle run over specs {f(2)=0; f(2)=f(3)=0; f(3)=-1},
# n in {1e4, 1e5, 1e6}, alpha in {1.5, 2, 4}: measured supremum of
# residual / mu_n(alpha) was 1.84e-4 (the all-primes Liouville spec,
# outside that grid, reaches 1.71e-3 at n = 1e6).
THEOREM3_RATIO_ENVELOPE = 0.005

_RESIDUAL_FLOOR = 1e-12


@dataclass(frozen=True)
class TrendPolicy:
    """Thresholds that operationalize o(.) conditions at finite scale.

    A trend passes when the monitored magnitudes are nonincreasing
    (within monotone_slack, relatively) over the final (1 - burn_in)
    fraction of the grid and the last value is below its threshold.
    """

    s_ratio_threshold: float = 0.1
    monotone_slack: float = 1e-9
    burn_in: float = 0.5
    axer_bound: float = 10.0
    t1_envelope: float = 0.6
    t3_ratio_envelope: float = THEOREM3_RATIO_ENVELOPE


@dataclass(frozen=True)
class WintnerResult:
    abs_sum_over_k: float
    target: complex
    mean: complex
    residual: float


@dataclass(frozen=True)
class Theorem3Result:
    mean: complex
    product: complex
    residual: float
    mu: float
    ratio: float | None
    ratio_infinite: bool


@dataclass(frozen=True)
class DifferenceIdentityResult:
    n: int
    sigma: float
    truncation: int
    lhs: complex
    rhs: complex
    error: float
    tail_correction: complex
    tail_slack: float
    quad_error: float


def _sigma_of(n: int) -> float:
    return 1.0 + 1.0 / math.log(n)


def _trend_ok(values, policy: TrendPolicy) -> bool:
    """Nonincreasing over the final (1 - burn_in) fraction, within slack."""
    if len(values) < 2:
        return True
    start = min(int(len(values) * policy.burn_in), len(values) - 2)
    window = values[start:]
    return all(
        b <= a * (1.0 + policy.monotone_slack) + _RESIDUAL_FLOOR
        for a, b in zip(window, window[1:])
    )


# -- Tauberian condition checks ---------------------------------------


def theorem1_residual(
    a: CoefficientSequence,
    n: int,
    params: EvalParams | None = None,
    spec: MultiplicativeSpec | None = None,
    table: SieveTable | None = None,
) -> float:
    """|A(n)/n - g(1 + 1/log n)|.

    g is the truncated Dirichlet sum of the coefficients; when the
    sequence derives from a multiplicative spec, pass it (with a table)
    and g is taken from the exact finite Euler product instead, which is
    tail-free because factors above the cutoff equal 1.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    sigma = _sigma_of(n)
    if spec is not None:
        if table is None:
            raise ValueError("spec-based evaluation needs a sieve table")
        g = euler_product(spec, table, sigma, min(spec.cutoff, table.limit))
    else:
        trunc = a.length if params is None else params.truncation
        g = g_eval(a, EvalParams(sigma=sigma, truncation=trunc)).value
    return abs(ingham_A(a, n) / n - g)


def theorem2_conditions(
    a: CoefficientSequence,
    n_grid,
    sigma_grid,
    policy: TrendPolicy | None = None,
    experiment_id: str = "theorem2",
) -> VerificationReport:
    """Both limit-existence conditions along finite grids.

    Per-n rows carry S(n)/(n log n) in magnitude (the sign oscillates for
    many inputs; the condition concerns magnitude) and g at 1 + 1/log n.
    The summary holds the Dirichlet values along the descending sigma
    grid and the two trend verdicts.
    """
    policy = policy or TrendPolicy()
    n_grid = [int(n) for n in n_grid]
    sigma_grid = [float(s) for s in sigma_grid]
    if not n_grid or not sigma_grid:
        raise ValueError("grids must be nonempty")
    if any(b <= a_ for a_, b in zip(n_grid, n_grid[1:])):
        raise ValueError("n grid must be strictly ascending")
    if any(s <= 1 for s in sigma_grid):
        raise ValueError("sigma grid must stay above 1")
    if any(b >= a_ for a_, b in zip(sigma_grid, sigma_grid[1:])):
        raise ValueError("sigma grid must be strictly descending")
    if n_grid[-1] > a.length:
        raise ValueError(f"grid exceeds stored length {a.length}")

    t0 = time.perf_counter()
    rows = []
    s_ratios = []
    for n in n_grid:
        A = ingham_A(a, n)
        S = ingham_S(a, n)
        ratio = abs(S) / (n * math.log(n)) if n > 1 else None
        g_n = g_eval(a, EvalParams(sigma=_sigma_of(n), truncation=a.length)).value
        passed = ratio is None or ratio <= policy.s_ratio_threshold
        rows.append(
            ReportRow(n=n, mean=A / n, g=g_n, s_ratio=ratio, passed=passed)
        )
        if ratio is not None:
            s_ratios.append(ratio)

    g_sigma = [g_eval(a, EvalParams(sigma=s, truncation=a.length)).value for s in sigma_grid]
    g_diffs = [abs(u - v) for u, v in zip(g_sigma, g_sigma[1:])]

    s_pass = bool(
        s_ratios
        and s_ratios[-1] <= policy.s_ratio_threshold
        and _trend_ok(s_ratios, policy)
    )
    g_pass = _trend_ok(g_diffs, policy)
    summary = {
        "pass": s_pass and g_pass,
        "s_trend_pass": s_pass,
        "g_trend_pass": g_pass,
        "max_residual": max(s_ratios) if s_ratios else 0.0,
        "limit_estimate": g_sigma[-1],
        "thresholds": {
            "s_ratio_threshold": policy.s_ratio_threshold,
            "monotone_slack": policy.monotone_slack,
            "burn_in": policy.burn_in,
        },
        "sigma_rows": [[s, g.real, g.imag] for s, g in zip(sigma_grid, g_sigma)],
        "wall_time_s": time.perf_counter() - t0,
    }
    return VerificationReport(experiment_id, rows, summary)


def theorem3_check(
    spec: MultiplicativeSpec,
    table: SieveTable,
    n: int,
    alpha: float,
    f_values: np.ndarray | None = None,
) -> Theorem3Result:
    """Mean-value against Euler-product bound for a multiplicative f.

    residual = |(1/n) sum f(m) - prod (1-1/p)/(1-f(p)/p)|, mu is the
    Hoelder deviation, ratio their quotient. Pass precomputed f_values
    (index-aligned, length >= n+1) to amortize extensions across calls.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if spec.bound_check is False:
        pv = list(spec.prime_values.values()) + [spec.default]
        if any(abs(v) > 1 + 1e-12 for v in pv):
            raise ValueError("|f(p)| <= 1 is required for the mean-value bound")
    f = f_values if f_values is not None else extend_completely_multiplicative(spec, table, n)
    if f.size < n + 1:
        raise ValueError(f"f_values covers {f.size - 1} < n = {n}")
    mean = csum(f[1 : n + 1]) / n
    product = euler_product(spec, table, 1.0, n)
    residual = abs(mean - product)
    mu = mu_n_alpha(spec, table, n, alpha)
    if mu > 0:
        return Theorem3Result(mean, product, residual, mu, residual / mu, False)
    if residual <= _RESIDUAL_FLOOR:
        return Theorem3Result(mean, product, residual, mu, 0.0, False)
    return Theorem3Result(mean, product, residual, mu, None, True)


def cond1_ratio(spec: MultiplicativeSpec, table: SieveTable, n: int) -> float:
    """(1/log n) * sum over p <= n of |f(p) - 1| log(p)/p."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds sieve limit {table.limit}")
    return _prime_deviation_sum(spec, table, n, 1.0) / math.log(n)


def cond2_ratio(spec: MultiplicativeSpec, table: SieveTable, n: int) -> float:
    """(1/(n log n)) * sum over m <= n of |theta_f(n/m) - n/m|,

    where theta_f(y) = sum over primes p <= y of f(p) log p. The inner
    prime sums come from one complex prefix array over the primes.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds sieve limit {table.limit}")
    theta = np.zeros(n + 1, dtype=np.complex128)
    primes = table.primes[table.primes <= n]
    theta[primes] = np.log(primes.astype(np.float64))
    for p in primes.tolist():
        fp = spec.value_at(p)
        if fp != 1:
            theta[p] *= fp
    theta_prefix = np.cumsum(theta)
    m = np.arange(1, n + 1)
    inner = np.abs(theta_prefix[n // m] - n / m.astype(np.float64))
    return rsum(inner.tolist()) / (n * math.log(n))


def check_wintner(a: CoefficientSequence, n: int) -> WintnerResult:
    """Absolute-convergence data for the mean-value limit at scale n."""
    if not 1 <= n <= a.length:
        raise ValueError(f"n = {n} outside [1, {a.length}]")
    k = np.arange(1, n + 1, dtype=np.float64)
    vals = a.a[1 : n + 1]
    abs_sum = rsum((np.abs(vals) / k).tolist())
    target = csum(vals / k)
    mean = ingham_A(a, n) / n
    return WintnerResult(abs_sum, target, mean, abs(mean - target))


def check_axer(a: CoefficientSequence, grid) -> np.ndarray:
    """Ratios sum_{k<=n} |a_k| / n along the grid (boundedness check)."""
    grid = np.asarray([int(n) for n in grid])
    if grid.size == 0:
        raise ValueError("empty grid")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly ascending")
    if grid[0] < 1 or grid[-1] > a.length:
        raise ValueError(f"grid outside [1, {a.length}]")
    prefix_abs = np.cumsum(np.abs(a.a))
    return prefix_abs[grid] / grid


# -- exact identity suites ---------------------------------------------


def s_difference_identity(a: CoefficientSequence, table: SieveTable, M: int) -> float:
    """max over 2 <= m <= M of |S(m) - S(m-1) - sum_{k|m} a_k log k|.

    S comes from block-decomposed queries, the divisor sums from a
    lattice pass; the two routes share no summation structure.
    """
    if not 2 <= M <= min(a.length, table.limit):
        raise ValueError(f"M = {M} outside [2, {min(a.length, table.limit)}]")
    divisor_sums = sum_over_divisors(a.a[: M + 1] * log_index(M))
    prefix = a.prefix_alog[: M + 1].tolist()
    worst = 0.0
    prev = _block_sum(prefix, 1)
    for m in range(2, M + 1):
        cur = _block_sum(prefix, m)
        err = abs(cur - prev - divisor_sums[m])
        if err > worst:
            worst = err
        prev = cur
    return worst


def s_decomposition_identity(a: CoefficientSequence, table: SieveTable, n: int) -> float:
    """|S(n) - [A(n) log n - sum_{k<n} A(k) log(1+1/k) - sum Lambda(k) A(n/k)]|.

    The A(k) sweep goes through batch_sums; Lambda comes from the sieve.
    Summation by parts of sum (A(k)-A(k-1)) log k leaves the middle sum
    running over k <= n-1 only (k = n telescopes into the leading term).
    """
    if not 2 <= n <= min(a.length, table.limit):
        raise ValueError(f"n = {n} outside [2, {min(a.length, table.limit)}]")
    lhs = ingham_S(a, n)
    A = np.zeros(n + 1, dtype=np.complex128)
    A[1:] = [v.A for v in batch_sums(a, range(1, n + 1))]
    k = np.arange(1, n, dtype=np.float64)
    middle = csum(A[1:n] * np.log1p(1.0 / k))
    lam = table.mangoldt_array
    pp = np.nonzero(lam[: n + 1])[0]
    prime_part = csum(lam[pp] * A[n // pp])
    rhs = A[n] * math.log(n) - middle - prime_part
    return abs(lhs - rhs)


def s_multiplicative_identity(
    spec: MultiplicativeSpec, table: SieveTable, m: int
) -> float:
    """|S(m) - sum_{k<=m} (f(k)-1) Lambda(k) * sum_{l<=m/k} f(l)|.

    Left side through the summation module on the inverted coefficients,
    right side as a direct double sum over prime powers.
    """
    if not 2 <= m <= table.limit:
        raise ValueError(f"m = {m} outside [2, {table.limit}]")
    f = extend_completely_multiplicative(spec, table, m)
    seq = a_from_f(table, f)
    lhs = ingham_S(seq, m)
    f_prefix = np.cumsum(f)
    lam = table.mangoldt_array
    pp = np.nonzero(lam[: m + 1])[0]
    rhs = csum((f[pp] - 1.0) * lam[pp] * f_prefix[m // pp])
    return abs(lhs - rhs)


# -- the exact difference identity -------------------------------------


class _SeriesTail:
    """The k > K remainder of the S(k)-weighted beta series, computed
    exactly by reorganizing over divisors.

    With the stored coefficients zero-extended, S(k) for k > K equals
    the sum of a_j log(j) floor(k/j) over j <= K, and summation by parts
    in k turns the remainder into

        integral over (sigma, inf) of G(u)/zeta(u) du,
        G(u) = S(K+1) (K+1)^-u
             + sum_j a_j log(j) j^-u Z(u, ceil((K+2)/j)),

    where Z(u, M) is the zeta tail from M. The quotients ceil((K+2)/j)
    take O(sqrt K) distinct values, so G costs one exponential sweep
    plus a segmented reduction per quadrature node.
    """

    _SMALL = 64

    def __init__(self, a: CoefficientSequence, K: int, s_k: complex):
        w = np.array(a.a[: K + 1] * log_index(K))
        js = np.nonzero(w)[0]
        js = js[js >= 2]
        self.K = K
        self.wj = w[js]
        self.log_js = np.log(js.astype(np.float64))
        m_ceil = -(-(K + 2) // js)
        # js ascending makes the quotient sequence nonincreasing.
        cuts = np.flatnonzero(np.diff(m_ceil)) + 1
        self.starts = np.concatenate(([0], cuts))
        self.seg_m = m_ceil[self.starts].astype(np.float64)
        self.small_m = np.arange(2, self._SMALL, dtype=np.float64)
        # Boundary value S(K+1) of the zero-extended sequence.
        self.s_edge = s_k + csum(
            np.array([a.a[d] * math.log(d) for d in _divisors_trial(K + 1) if 2 <= d <= K])
        )
        self.edge = float(K + 1)

    def _zeta_tails(self, u: float) -> np.ndarray:
        """Z(u, M) for every segment quotient M, hybrid direct/EM."""
        big = np.maximum(self.seg_m, float(self._SMALL))
        z = big ** (1.0 - u) / (u - 1.0) + 0.5 * big**-u
        poch = u
        power = big ** (-u - 1.0)
        minv = big**-2.0
        for k, coeff in enumerate(_EM_COEFFS_LOCAL):
            z += coeff * poch * power
            poch *= (u + 2 * k + 1) * (u + 2 * k + 2)
            power *= minv
        small_terms = self.small_m**-u
        suffix = np.concatenate((np.cumsum(small_terms[::-1])[::-1], [0.0]))
        need = self.seg_m < self._SMALL
        z[need] += suffix[(self.seg_m[need] - 2).astype(np.intp)]
        return z

    def integrand(self, u: float) -> complex:
        pw = self.wj * np.exp(-u * self.log_js)
        seg = np.add.reduceat(pw, self.starts)
        total = complex(np.dot(seg, self._zeta_tails(u)))
        total += self.s_edge * self.edge**-u
        return total / zeta_real(u)

    def bound(self, sigma: float) -> float:
        pw = np.abs(self.wj) * np.exp(-sigma * self.log_js)
        seg = np.add.reduceat(pw, self.starts)
        total = float(np.dot(seg, self._zeta_tails(sigma)))
        return total + abs(self.s_edge) * self.edge**-sigma


_EM_COEFFS_LOCAL = (1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0)


def _divisors_trial(m: int) -> list[int]:
    """Divisors by trial division; used only for the single boundary
    index K + 1, which may sit just beyond the sieve limit."""
    small = []
    large = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def difference_identity_check(
    a: CoefficientSequence,
    table: SieveTable,
    n: int,
    params: EvalParams,
    s_values: np.ndarray | None = None,
    d_values: np.ndarray | None = None,
) -> DifferenceIdentityResult:
    """Check the exact identity tying A(n), g(1+1/log n) and S-weighted
    integrals of the f_t family, at quadrature accuracy.

    The stored coefficients are treated as the whole sequence (zero
    beyond the stored length), which makes the Dirichlet value g exact
    and the identity exact; the only approximation left is quadrature.
    The weighted series is evaluated in three quadratures: the k <= K
    part after summation by parts, the exact k > K remainder
    (:class:`_SeriesTail`), and the boundary term. tail_correction
    reports the remainder's value; tail_slack reports the conventional
    a-priori envelope 2 n |S(K)/K| ztail(sigma, K+1) / (log n log K)
    for the region it replaces.

    Cost guard: 2 <= n <= 50, so sigma = 1 + 1/log n stays >= 1.25 and
    the series converges at a practical rate.

    s_values / d_values (index-aligned S(k) and S(k) - S(k-1) up to K)
    can be precomputed once per sequence and shared across n.
    """
    if not 2 <= n <= 50:
        raise ValueError(f"n = {n} outside the supported range [2, 50]")
    K = params.truncation
    if K > a.length:
        raise ValueError(f"truncation {K} exceeds stored length {a.length}")
    if K < n:
        raise ValueError(f"truncation {K} must cover n = {n}")
    if n > table.limit:
        raise ValueError(f"n = {n} exceeds sieve limit {table.limit}")

    sigma = _sigma_of(n)
    logn = math.log(n)
    quad_tol = params.quad_tol
    tail_tol = params.tail_tol

    if d_values is None:
        d_values = sum_over_divisors(a.a[: K + 1] * log_index(K))
    if s_values is None:
        s_values = np.cumsum(d_values)

    # Left side: the Dirichlet value is exact for the stored sequence.
    A_n = ingham_A(a, n)
    g = g_eval(a, EvalParams(sigma=sigma, truncation=K)).value
    S_n = complex(s_values[n])
    lhs = A_n - n * g - S_n / logn

    quad_error = 0.0

    # First sum: S(k)-weighted differences of F_t integrals, k < n.
    prime_lists = [[]] * 2 + [table.distinct_primes(m) for m in range(2, n + 1)]

    def F_small(x: int, t: float) -> float:
        total = 1.0
        for m in range(2, x + 1):
            prod = 1.0
            for p in prime_lists[m]:
                prod *= 1.0 - float(p) ** -t
            total += prod
        return total

    t1_terms = []
    for k in range(2, n):
        x1 = n // k
        x2 = n // (k + 1)

        def integrand(t: float, k=k, x1=x1, x2=x2) -> float:
            w1 = float(k) ** -t
            w2 = float(k + 1) ** -t
            return F_small(x1, t) * w1 - F_small(x2, t) * w2

        res = integral_zero_to_inf(
            integrand, rate=float(k), bound=2.0 * x1, quad_tol=quad_tol, tail_tol=tail_tol
        )
        t1_terms.append(complex(s_values[k]) * res.value)
        quad_error += abs(s_values[k]) * res.error
    t1 = csum(np.array(t1_terms)) if t1_terms else 0j

    # Weighted series, Abel-swapped: sum_{k=2..K} S(k) (beta_k - beta_{k+1})
    # equals sum_{k=2..K} D(k) beta_k - S(K) beta_{K+1}, with
    # beta_k = integral over (sigma, inf) of k^-u / zeta(u); the k > K
    # remainder is added exactly through its divisor reorganization.
    ks = np.nonzero(d_values)[0]
    ks = ks[ks >= 2]
    t2 = 0j
    tail_correction = 0j
    tail_slack = 0.0
    if ks.size:
        log_ks = np.log(ks.astype(np.float64))
        dk = d_values[ks]
        bound_h = float(np.dot(np.abs(dk), ks.astype(np.float64) ** -sigma))
        kmin = float(ks[0])

        def h(u: float) -> complex:
            return complex(np.dot(dk, np.exp(-u * log_ks))) / zeta_real(u)

        res_h = integral_sigma_to_inf(
            h, sigma, rate=kmin, bound=bound_h, quad_tol=quad_tol, tail_tol=tail_tol
        )
        beta_edge = integral_sigma_to_inf(
            lambda u: float(K + 1) ** -u / zeta_real(u),
            sigma,
            rate=float(K + 1),
            bound=float(K + 1) ** -sigma,
            quad_tol=quad_tol,
            tail_tol=tail_tol,
        )
        s_k = complex(s_values[K])
        t2 = n * (res_h.value - s_k * beta_edge.value)
        quad_error += n * (res_h.error + abs(s_k) * beta_edge.error)

        series_tail = _SeriesTail(a, K, s_k)
        tail_res = integral_sigma_to_inf(
            series_tail.integrand,
            sigma,
            rate=float(K + 1),
            bound=series_tail.bound(sigma),
            quad_tol=quad_tol,
            tail_tol=tail_tol,
        )
        tail_correction = n * tail_res.value
        quad_error += n * tail_res.error
        tail_slack = (
            2.0 * n * abs(s_k / K) * zeta_tail(sigma, K + 1) / (logn * math.log(K))
        )

    rhs = t1 - t2 - tail_correction
    return DifferenceIdentityResult(
        n=n,
        sigma=sigma,
        truncation=K,
        lhs=lhs,
        rhs=rhs,
        error=abs(lhs - rhs),
        tail_correction=tail_correction,
        tail_slack=tail_slack,
        quad_error=quad_error,
    )


# -- f_t estimate families (empirical ratio suite) ----------------------


def lemma_ratio_suite(
    table: SieveTable,
    envelope: float = LEMMA_ENVELOPE,
    quad_tol: float = 1e-8,
    tail_tol: float = 1e-10,
    t_grid=LEMMA_T_GRID,
    x_grid=LEMMA_X_GRID,
    k_grid=LEMMA_K_GRID,
    vx_grid=LEMMA_VX_GRID,
) -> list[dict]:
    """Empirical boundedness ratios for the five f_t estimate families.

    Families (per (t, x)): (i) sum f_t(m)/m against 1 + t log x;
    (ii) F_t(x) - x/zeta(1+t) against x^(1-t) + sum d^-t; (iii) the
    mu-weighted log identity, absolute; (iv) the doubling increment
    F_t(x) - F_t(x/2) against x(1/log x + t); and (v), per (k, x), the
    integrated F_t comparison against x/(k log^2(xk)).

    Returns one row per grid cell: family, t, x, k, value, bound, ratio,
    pass (ratio <= envelope).
    """
    x_max = max(x_grid)
    if x_max > table.limit:
        raise ValueError(f"grid maximum {x_max} exceeds sieve limit {table.limit}")
    mu = table.mobius_array[: x_max + 1].astype(np.float64)
    d = np.arange(x_max + 1, dtype=np.float64)
    d[0] = 1.0
    logd = np.log(d)
    rows: list[dict] = []

    def add(family, t, x, k, value, bound):
        ratio = value / bound
        rows.append(
            {
                "family": family,
                "t": t,
                "x": x,
                "k": k,
                "value": value,
                "bound": bound,
                "ratio": ratio,
                "pass": ratio <= envelope,
            }
        )

    for t in t_grid:
        ft = f_t_table(table, t, x_max)
        inv_zeta = 1.0 / zeta_real(1.0 + t)
        q_prefix = np.cumsum(ft.values / d)
        dt_prefix = np.cumsum(d**-t)
        mu_d1t = mu * d ** (-1.0 - t)
        p1_prefix = np.cumsum(mu_d1t)
        p2_prefix = np.cumsum(mu_d1t * logd)
        for x in x_grid:
            logx = math.log(x)
            q_x = float(q_prefix[x])
            add("sum_ft_over_m", t, x, None, q_x, 1.0 + t * logx)
            add(
                "partial_sums",
                t,
                x,
                None,
                abs(float(ft.prefix[x]) - x * inv_zeta),
                x ** (1.0 - t) + float(dt_prefix[x]),
            )
            mu_log_sum = logx * float(p1_prefix[x]) - float(p2_prefix[x])
            add("mu_log_identity", t, x, None, abs(q_x - mu_log_sum), 1.0)
            add(
                "doubling_increment",
                t,
                x,
                None,
                float(ft.prefix[x]) - ft.F(x / 2.0),
                x * (1.0 / logx + t),
            )

    for k in k_grid:
        for x in vx_grid:

            def weight(t: float, k=k) -> float:
                return float(k) ** -t - float(k + 1) ** -t

            def lhs_integrand(t: float, x=x, k=k) -> float:
                w = weight(t, k)
                if w == 0.0 or t <= 0.0:
                    return 0.0
                return ft_partial_sum(table, x, t) * w

            def rhs_integrand(t: float, k=k) -> float:
                w = weight(t, k)
                if w == 0.0 or t <= 0.0:
                    return 0.0
                return w / zeta_real(1.0 + t)

            i1 = integral_zero_to_inf(
                lhs_integrand, rate=float(k), bound=float(x), quad_tol=quad_tol, tail_tol=tail_tol
            )
            i2 = integral_zero_to_inf(
                rhs_integrand, rate=float(k), bound=1.0, quad_tol=quad_tol, tail_tol=tail_tol
            )
            value = abs(i1.value - x * i2.value)
            bound = x / (k * math.log(x * k) ** 2)
            add("integrated_comparison", None, x, k, value, bound)

    return rows
