"""Exception types raised across the package."""


class RingMismatchError(ValueError):
    """Operands live in different quadratic rings (different ``d``)."""


class NotInvertibleError(ArithmeticError):
    """Element has zero norm in a ring with zero divisors."""


class DegenerateDiscriminantError(ValueError):
    """``p**2 + 4*q == 0``: the characteristic polynomial has a repeated root."""


class UnknownPresetError(KeyError):
    pass


class NonUnitConstantError(ValueError):
    """Generating-function denominator does not start with 1."""
