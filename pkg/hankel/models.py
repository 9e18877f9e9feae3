# hankel/models.py
"""
Domain types of the hankel app.

Nothing here is persisted: the app has no database tables. The types are
immutable value objects shared by the arithmetic, the engines and the command.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np
from django.db import models

from .exceptions import InvalidFamilySpec


def as_rational(value) -> Fraction:
    """Coerce ints, strings like "3/4" and Fractions to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted on the exact path")
    return Fraction(value)


class Family(models.TextChoices):
    HERMITE = "hermite", "Hermite"
    LAGUERRE = "laguerre", "Laguerre"
    GEGENBAUER = "gegenbauer", "Gegenbauer"
    JACOBI = "jacobi", "Jacobi"
    JACOBI_SHIFTED = "jacobi-shifted", "Shifted Jacobi"


# Parameters each family takes, in display order.
FAMILY_PARAMETERS = {
    Family.HERMITE: (),
    Family.LAGUERRE: ("alpha",),
    Family.GEGENBAUER: ("lam",),
    Family.JACOBI: ("alpha", "beta"),
    Family.JACOBI_SHIFTED: ("alpha", "beta"),
}

PARAMETER_LABELS = {"alpha": "alpha", "beta": "beta", "lam": "lambda"}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    lam: Optional[Fraction] = None

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            raise InvalidFamilySpec(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", family)

        wanted = FAMILY_PARAMETERS[family]
        for name in ("alpha", "beta", "lam"):
            value = getattr(self, name)
            if name not in wanted:
                # irrelevant parameters are dropped so equal specs compare equal
                object.__setattr__(self, name, None)
                continue
            if value is None:
                raise InvalidFamilySpec(
                    f"{PARAMETER_LABELS[name]} is required for {family.value}"
                )
            object.__setattr__(self, name, as_rational(value))

        if self.alpha is not None and self.alpha <= -1:
            raise InvalidFamilySpec("alpha must be > -1")
        if self.beta is not None and self.beta <= -1:
            raise InvalidFamilySpec("beta must be > -1")
        if self.lam is not None and (self.lam <= Fraction(-1, 2) or self.lam == 0):
            raise InvalidFamilySpec("lambda must be > -1/2 and nonzero")

    def shifted(self, shift: int) -> "FamilySpec":
        """Raise every parameter by `shift` (alpha+i, beta+i, lambda+i)."""
        if shift == 0:
            return self
        return replace(
            self,
            alpha=None if self.alpha is None else self.alpha + shift,
            beta=None if self.beta is None else self.beta + shift,
            lam=None if self.lam is None else self.lam + shift,
        )

    @property
    def params(self) -> dict:
        return {
            PARAMETER_LABELS[name]: getattr(self, name)
            for name in FAMILY_PARAMETERS[self.family]
        }

    def __str__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family.value}({params})" if params else self.family.value


@dataclass(frozen=True)
class Basis:
    """w_i(x) = (scale * (x - center)) ** i."""

    center: Fraction = Fraction(0)
    scale: Fraction = Fraction(1)

    def variable(self, x) -> Fraction:
        return self.scale * (as_rational(x) - self.center)

    def element(self, i: int, x) -> Fraction:
        return self.variable(x) ** i


MONOMIAL = Basis()


@dataclass(frozen=True)
class PolyCoeffs:
    coeffs: tuple
    basis: Basis = MONOMIAL

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """Dense square matrix of Fractions held in a read-only object array."""

    entries: np.ndarray

    def __post_init__(self):
        rows = [[as_rational(x) for x in row] for row in self.entries]
        size = len(rows)
        if size == 0 or any(len(row) != size for row in rows):
            raise ValueError("matrix must be square and non-empty")
        array = np.empty((size, size), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                array[i, j] = x
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @classmethod
    def from_function(cls, size: int, entry) -> "ExactMatrix":
        return cls([[entry(i, j) for j in range(size)] for i in range(size)])

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls.from_function(size, lambda i, j: Fraction(int(i == j)))

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.size - 1

    def __getitem__(self, index):
        return self.entries[index]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.entries @ other.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.size == other.size and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.entries.T)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def scaled(self, factor) -> "ExactMatrix":
        factor = as_rational(factor)
        return ExactMatrix(self.entries * factor)

    def rows(self) -> list:
        return [list(row) for row in self.entries]

    def first_difference(self, other: "ExactMatrix"):
        """(i, j) of the first differing entry in row-major order, or None."""
        for i in range(self.size):
            for j in range(self.size):
                if self.entries[i, j] != other.entries[i, j]:
                    return i, j
        return None

    def __repr__(self):
        return f"ExactMatrix({[[str(x) for x in row] for row in self.entries]})"


@dataclass(frozen=True)
class OrthoTable:
    n: int
    basis: Basis
    monic: tuple
    norms: tuple

    def __post_init__(self):
        if len(self.monic) != self.n + 1 or len(self.norms) != self.n + 1:
            raise ValueError("table needs one polynomial and one norm per degree")
        for m, (poly, norm) in enumerate(zip(self.monic, self.norms)):
            if poly.degree != m or poly.leading != 1:
                raise ValueError(f"monic[{m}] is not monic of degree {m}")
            if norm <= 0:
                raise ValueError(f"norms[{m}] must be positive")


class FormulaId(models.TextChoices):
    HERMITE_DET = "hermite-superfactorial-det"
    HERMITE_INVERSE = "hermite-inverse-sum"
    LAGUERRE_DET = "laguerre-pochhammer-det"
    LAGUERRE_INVERSE = "laguerre-binomial-inverse"
    GEGENBAUER_DET = "gegenbauer-product-det"
    GEGENBAUER_INVERSE = "gegenbauer-inverse-sum"
    JACOBI_DET_AS_PRINTED = "jacobi-barnes-det-as-printed"
    JACOBI_DET = "jacobi-norm-det"
    JACOBI_INVERSE = "jacobi-inverse-sum"
    SHIFTED_JACOBI_DET = "shifted-jacobi-det"
    SHIFTED_JACOBI_INVERSE = "shifted-jacobi-inverse"


@dataclass(frozen=True)
class ExplicitResult:
    value: object
    formula_id: FormulaId
    normalized: bool = True


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    i: Optional[int] = None
    j: Optional[int] = None
    expected: Optional[Fraction] = None
    actual: Optional[Fraction] = None

    def __post_init__(self):
        # predicate checks (e.g. a positive determinant) carry only `actual`
        if not self.passed and self.actual is None:
            raise ValueError(f"failing check {self.name!r} needs a witness")


@dataclass(frozen=True)
class VerifyReport:
    spec: FamilySpec
    n: int
    checks: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list:
        return [check for check in self.checks if not check.passed]


@dataclass(frozen=True)
class DiscrepancyNote:
    """Floating evaluation of a printed determinant beside the exact value."""

    spec: FamilySpec
    n: int
    formula_id: str
    digits: int
    printed_value: object  # mpmath.mpf, or None when the printed form is undefined
    reference_value: object  # exact value carried to the printed form's scale, as mpf
    exact_value: Fraction
    agrees: bool
    relative_error: object = None
    printed_matrix_det: Optional[Fraction] = None
    note: str = ""
