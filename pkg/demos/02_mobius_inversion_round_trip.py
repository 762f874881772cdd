"""The pairing between coefficients a_k and f(m) = sum of a_d over d|m.

Mobius inversion makes the pairing a bijection: a_m is recovered as
sum of mu(m/d) f(d). Both directions run as divisor-lattice passes, so
a full round trip over a million coefficients costs seconds, and the
transforms reproduce classical identities (constant 1 from the unit
sequence, Euler's totient from the identity map).
"""

import numpy as np

from inghamsum import CoefficientSequence, a_from_f, build_sieve, f_from_a, named_sequence

table = build_sieve(10_000)

# The unit sequence (a_1 = 1) sums to the constant function 1.
unit = named_sequence("unit", 100, table)
print("f from unit coefficients:", f_from_a(table, unit)[1:8].real.tolist())

# Mobius coefficients collapse f to the indicator of m = 1.
mu = named_sequence("mu", 100, table)
f_mu = f_from_a(table, mu)
print("f from mu coefficients:", f_mu[1:8].real.tolist())

# Inverting f(m) = m produces Euler's totient.
f_identity = np.arange(101, dtype=complex)
totient = a_from_f(table, f_identity)
print("totient via inversion:", totient.values()[:10].real.astype(int).tolist())

# Round trip on random complex data is exact to machine precision.
rng = np.random.default_rng(1)
vals = rng.standard_normal(2048) + 1j * rng.standard_normal(2048)
seq = CoefficientSequence.from_values(vals)
back = a_from_f(table, f_from_a(table, seq))
print("round-trip max error:", np.abs(back.values() - vals).max())

# Completely multiplicative functions come from their prime values.
from inghamsum import MultiplicativeSpec, extend_completely_multiplicative

liouville = MultiplicativeSpec(cutoff=30, default=-1.0)
print("Liouville lambda(1..10):", extend_completely_multiplicative(liouville, table, 10)[1:].real.tolist())

even_zero = MultiplicativeSpec({2: 0}, cutoff=30)
f = extend_completely_multiplicative(even_zero, table, 12)
a = a_from_f(table, f)
print("f(2) = 0 induces the two-term coefficient sequence:", a.values()[:4].real.tolist())
