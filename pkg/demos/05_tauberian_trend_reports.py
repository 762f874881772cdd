"""Finite-scale trend checks for the Tauberian conditions.

Asymptotic statements (S(n) = o(n log n), g(sigma) -> C, mean values
approaching Euler products) are monitored along geometric grids: the
harness records ratios, checks that the trend is monotone past a
burn-in, and compares the last point against a threshold. Negative
examples are as instructive as positive ones, so this demo includes a
sequence that violates the boundedness hypothesis.
"""

import math

import numpy as np

from inghamsum import (
    CoefficientSequence,
    MultiplicativeSpec,
    a_from_f,
    build_sieve,
    check_axer,
    check_wintner,
    cond1_ratio,
    cond2_ratio,
    extend_completely_multiplicative,
    named_sequence,
    theorem1_residual,
    theorem2_conditions,
    theorem3_check,
)

table = build_sieve(100_000)

# Mean values of f(m) = [m odd] against the exact finite Euler product.
even_zero = MultiplicativeSpec({2: 0}, cutoff=100_000)
f = extend_completely_multiplicative(even_zero, table, 100_000)
seq = a_from_f(table, f)
print("mean-vs-Dirichlet residual for f(2) = 0 (bound 0.6/log n):")
for n in (10**3, 10**4, 10**5):
    r = theorem1_residual(seq, n, spec=even_zero, table=table)
    print(f"  n = {n:>6}: residual = {r:.5f}   0.6/log n = {0.6 / math.log(n):.5f}")

# Both limit conditions for the Mobius coefficients (limit C = 0).
mu = named_sequence("mu", 100_000, table)
report = theorem2_conditions(mu, [100, 1000, 10_000, 100_000], [2.0, 1.5, 1.25, 1.125])
print("\nlimit-condition report for mu:")
for row in report.rows:
    print(f"  n = {row.n:>6}: |S|/(n log n) = {row.s_ratio:.5f}")
print("  s-trend pass:", report.summary["s_trend_pass"], " g-trend pass:", report.summary["g_trend_pass"])
print("  Dirichlet limit estimate:", report.summary["limit_estimate"])

# Mean value of a multiplicative function against its Euler product.
chk = theorem3_check(even_zero, table, 100_000, 2.0)
print("\nmean-value bound for f(2) = 0 at n = 1e5:")
print(f"  mean = {chk.mean.real:.6f}, product = {chk.product.real}, ratio = {chk.ratio}")

# Hypothesis ratios: the Liouville function fails condition 1.
liouville = MultiplicativeSpec(cutoff=100_000, default=-1.0)
print("\ncondition ratios (should tend to zero when the hypothesis holds):")
print("  cond1 f(2)=0  at 1e5:", cond1_ratio(even_zero, table, 100_000))
print("  cond1 Liouville at 1e5:", cond1_ratio(liouville, table, 100_000), " <- does not vanish")
print("  cond2 all-ones at 1e4:", cond2_ratio(MultiplicativeSpec(cutoff=100_000), table, 10_000))

# Absolute-convergence check (Wintner route) and the O(n) side condition.
inv = named_sequence("inverse-squares", 10_000, table)
w = check_wintner(inv, 10_000)
print("\nWintner data for a_k = k^-2:")
print(f"  mean = {w.mean.real:.7f}, target = {w.target.real:.7f}, residual = {w.residual:.2e}")

print("\nAxer ratios sum |a_k| / n:")
print("  mu (squarefree density ~ 0.608):", check_axer(mu, [100_000])[0])
log_seq = CoefficientSequence.from_values(np.log(np.arange(1, 10_001)))
print("  a_k = log k (unbounded, negative example):", check_axer(log_seq, [10_000])[0])
