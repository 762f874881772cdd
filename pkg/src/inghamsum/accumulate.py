"""Compensated accumulation helpers.

Scalar reductions go through math.fsum (exactly rounded, order
independent), so repeated runs produce bit-identical values. Large
index-aligned prefix arrays use plain float64 cumulative sums instead;
their rounding error is orders of magnitude below every tolerance used
by the verification suites.
"""

import math

import numpy as np


def rsum(values) -> float:
    """Exactly rounded sum of real values."""
    return math.fsum(values)


def csum(values) -> complex:
    """Compensated complex sum: fsum over real and imaginary parts."""
    arr = np.asarray(values)
    if arr.size == 0:
        return 0j
    if np.iscomplexobj(arr):
        return complex(math.fsum(arr.real.tolist()), math.fsum(arr.imag.tolist()))
    return complex(math.fsum(arr.tolist()), 0.0)
