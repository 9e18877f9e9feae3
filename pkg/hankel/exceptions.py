# hankel/exceptions.py
from django.core.exceptions import ValidationError


class HankelError(Exception):
    """Base class for every error raised by the hankel app."""


class InvalidFamilySpec(HankelError, ValidationError):
    """Family parameters outside the region where the measure is positive."""

    def __init__(self, message, code="invalid_family_spec"):
        ValidationError.__init__(self, message, code=code)

    def __str__(self):
        return self.message


class ZeroDenominator(HankelError, ArithmeticError):
    """A lower hypergeometric parameter makes a shifted factorial vanish."""


class NotPositiveDefinite(HankelError, ArithmeticError):
    """Gram–Schmidt met a non-positive norm."""


class SingularMatrix(HankelError, ArithmeticError):
    """Elimination ran out of pivots."""
