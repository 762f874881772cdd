"""Exception types shared across the package.

The CLI maps these onto distinct exit statuses, so keep the taxonomy
stable: input/schema problems, capacity limits, numerical failures.
"""


class SpecFormatError(ValueError):
    """A function spec or coefficient file violates its schema."""


class CapacityError(ValueError):
    """A requested size exceeds the configured sieve or memory cap."""


class SingularFactorError(ArithmeticError):
    """An Euler product factor has a vanishing denominator."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""
