# hankel/families.py
"""
Closed-form determinants and inverses of the five normalized moment matrices,
plus the floating-point side: total masses of the unnormalized measures and
the Barnes-G determinant formulas evaluated as printed.

The exact path is rational end to end. Gamma and Barnes-G ratios in the
determinant formulas are reduced to shifted factorials before evaluation; only
the float path ever calls a Gamma routine.
"""
import logging
from fractions import Fraction

from mpmath import mp
from mpmath.libmp import from_rational

from . import oracle
from .exact_arith import barnes_g_int, binomial, factorial, hyp_terminating, pochhammer
from .exceptions import InvalidFamilySpec
from .gram_engine import moment_matrix
from .models import (
    DiscrepancyNote,
    ExactMatrix,
    ExplicitResult,
    Family,
    FamilySpec,
    FormulaId,
    as_rational,
)
from .opoly import jacobi_weight, special_value

logger = logging.getLogger(__name__)

DET_FORMULAS = {
    Family.HERMITE: FormulaId.HERMITE_DET,
    Family.LAGUERRE: FormulaId.LAGUERRE_DET,
    Family.GEGENBAUER: FormulaId.GEGENBAUER_DET,
    Family.JACOBI: FormulaId.JACOBI_DET,
    Family.JACOBI_SHIFTED: FormulaId.SHIFTED_JACOBI_DET,
}

INVERSE_FORMULAS = {
    Family.HERMITE: FormulaId.HERMITE_INVERSE,
    Family.LAGUERRE: FormulaId.LAGUERRE_INVERSE,
    Family.GEGENBAUER: FormulaId.GEGENBAUER_INVERSE,
    Family.JACOBI: FormulaId.JACOBI_INVERSE,
    Family.JACOBI_SHIFTED: FormulaId.SHIFTED_JACOBI_INVERSE,
}


# ---------------------------
# Determinants
# ---------------------------
def explicit_det(spec: FamilySpec, n: int) -> Fraction:
    """Determinant of moment_matrix(spec, n) from the family's product formula."""
    if n < 0:
        raise ValueError("n must be >= 0")
    family = spec.family

    if family == Family.HERMITE:
        # 2^{-n(n+1)/2} G(n+2)
        return barnes_g_int(n + 2) / 2 ** (n * (n + 1) // 2)

    result = Fraction(1)
    for k in range(n + 1):
        result *= _det_factor(spec, k)
    return result


def _det_factor(spec: FamilySpec, k: int) -> Fraction:
    family = spec.family

    if family == Family.LAGUERRE:
        # prod k! Gamma(a+k+1), with Gamma(a+1)^{n+1} divided out
        return factorial(k) * pochhammer(spec.alpha + 1, k)

    if family == Family.GEGENBAUER:
        lam = spec.lam
        return (
            factorial(k) * pochhammer(2 * lam, k) * lam
            / ((lam + k) * 4 ** k * pochhammer(lam, k) ** 2)
        )

    a, b = spec.alpha, spec.beta
    factor = (
        pochhammer(a + 1, k) * pochhammer(b + 1, k) * factorial(k)
        / (jacobi_weight(spec, k) * pochhammer(k + a + b + 1, k) ** 2)
    )
    if family == Family.JACOBI:
        factor *= 4 ** k
    return factor


# ---------------------------
# Inverses
# ---------------------------
def explicit_inverse(spec: FamilySpec, n: int) -> ExactMatrix:
    """
    Inverse of moment_matrix(spec, n), each entry a finite sum over
    k = max(i, j) .. n of products of Taylor coefficients at the anchor.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prefactor, term = _INVERSE_SUMS[spec.family](spec)
    return ExactMatrix.from_function(
        n + 1,
        lambda i, j: prefactor(i, j) * sum(
            (term(i, j, k) for k in range(max(i, j), n + 1)), Fraction(0)
        ),
    )


def _hermite_sum(spec):
    def prefactor(i, j):
        return Fraction(2) ** (i + j)

    def term(i, j, k):
        return (
            binomial(k, i) * special_value(spec, k - i)
            * binomial(k, j) * special_value(spec, k - j)
            / (factorial(k) * 2 ** k)
        )

    return prefactor, term


def _laguerre_sum(spec):
    a = spec.alpha

    def prefactor(i, j):
        return 1 / ((-1) ** (i + j) * pochhammer(a + 1, i) * pochhammer(a + 1, j))

    def term(i, j, k):
        return pochhammer(a + 1, k) / factorial(k) * binomial(k, i) * binomial(k, j)

    return prefactor, term


def _gegenbauer_sum(spec):
    lam = spec.lam

    def prefactor(i, j):
        # the Gamma prefactor of the unnormalized inverse becomes 1/lambda
        return (
            Fraction(2) ** (i + j) * pochhammer(lam, i) * pochhammer(lam, j)
            / (factorial(i) * factorial(j) * lam)
        )

    def term(i, j, k):
        return (
            factorial(k) * (lam + k)
            * special_value(spec, k - i, i) * special_value(spec, k - j, j)
            / pochhammer(2 * lam, k)
        )

    return prefactor, term


def _jacobi_sum(spec):
    a, b = spec.alpha, spec.beta

    def prefactor(i, j):
        return 1 / (Fraction(-2) ** (i + j) * factorial(i) * factorial(j))

    def term(i, j, k):
        return (
            factorial(k) * jacobi_weight(spec, k)
            / (pochhammer(a + 1, k) * pochhammer(b + 1, k))
            * pochhammer(k + a + b + 1, i) * special_value(spec, k - i, i)
            * pochhammer(k + a + b + 1, j) * special_value(spec, k - j, j)
        )

    return prefactor, term


def _shifted_jacobi_sum(spec):
    a, b = spec.alpha, spec.beta

    def prefactor(i, j):
        return (-1) ** (i + j) / (pochhammer(a + 1, i) * pochhammer(a + 1, j))

    def term(i, j, k):
        return (
            pochhammer(a + 1, k) * jacobi_weight(spec, k)
            / (factorial(k) * pochhammer(b + 1, k))
            * binomial(k, i) * binomial(k, j)
            * pochhammer(k + a + b + 1, i) * pochhammer(k + a + b + 1, j)
        )

    return prefactor, term


_INVERSE_SUMS = {
    Family.HERMITE: _hermite_sum,
    Family.LAGUERRE: _laguerre_sum,
    Family.GEGENBAUER: _gegenbauer_sum,
    Family.JACOBI: _jacobi_sum,
    Family.JACOBI_SHIFTED: _shifted_jacobi_sum,
}


def explicit_result(spec: FamilySpec, n: int, kind: str) -> ExplicitResult:
    """Wrap explicit_det / explicit_inverse with the formula that produced them."""
    if kind == "det":
        return ExplicitResult(explicit_det(spec, n), DET_FORMULAS[spec.family])
    if kind == "inv":
        return ExplicitResult(explicit_inverse(spec, n), INVERSE_FORMULAS[spec.family])
    raise ValueError(f"unknown result kind {kind!r}")


# ---------------------------
# Float path
# ---------------------------
def as_float(value, digits: int):
    """`value` correctly rounded to an mpf carrying `digits` significant digits."""
    value = as_rational(value)
    with mp.workdps(digits):
        return mp.make_mpf(from_rational(value.numerator, value.denominator, mp.prec, "n"))


def _mpf(value):
    value = as_rational(value)
    return mp.mpf(value.numerator) / value.denominator


def _gamma_ratio_exp(*terms):
    """exp(sum of sign * loggamma(x)) for (sign, x) pairs."""
    return mp.exp(sum(sign * mp.loggamma(_mpf(x)) for sign, x in terms))


def unnormalized_scale(spec: FamilySpec, digits: int):
    """Total mass of the family's unnormalized weight, to `digits` digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    family = spec.family
    with mp.workdps(digits + 5):
        if family == Family.HERMITE:
            scale = mp.sqrt(mp.pi)
        elif family == Family.LAGUERRE:
            scale = _gamma_ratio_exp((1, spec.alpha + 1))
        elif family == Family.GEGENBAUER:
            half = Fraction(1, 2)
            scale = _gamma_ratio_exp((1, half), (1, spec.lam + half), (-1, spec.lam + 1))
        else:
            a, b = spec.alpha, spec.beta
            scale = mp.mpf(2) ** _mpf(a + b + 1) * _gamma_ratio_exp(
                (1, a + 1), (1, b + 1), (-1, a + b + 2)
            )
    with mp.workdps(digits):
        return +scale


def _printed_det(spec: FamilySpec, n: int):
    """Barnes-G determinant of the family, evaluated literally at mp precision."""
    G = mp.barnesg
    gamma = mp.gamma
    pi = mp.pi
    family = spec.family

    if family == Family.HERMITE:
        return mp.mpf(2) ** (-n * (n + 1) / mp.mpf(2)) * pi ** ((n + 1) / mp.mpf(2)) * G(n + 2)

    if family == Family.LAGUERRE:
        a = _mpf(spec.alpha)
        return G(n + 2) * G(a + n + 2) / G(a + 1)

    if family == Family.GEGENBAUER:
        lam = _mpf(spec.lam)
        return (
            pi ** (n + 1) * G(n + 2)
            / (mp.mpf(2) ** ((n + 1) * (n + 2 * lam - 1)) * mp.rf(lam, n + 1))
            * G(2 * lam + n + 1) * G(lam) ** 2
            / (G(2 * lam) * G(lam + n + 1) ** 2)
        )

    a, b = _mpf(spec.alpha), _mpf(spec.beta)
    s = a + b + 1
    if family == Family.JACOBI:
        return (
            (gamma(s) * mp.mpf(2) ** (-(2 * a + 2 * b + n + 1)) * pi / (gamma(s) * gamma(s))) ** (n + 1)
            * G(n + 2) * G(s / 2) ** 2 * G((s + 1) / 2) ** 2
            / (G((s + 2) / 2 + n) ** 2 * G((s + 3) / 2 + n) ** 2)
            * G(a + b + n + 2) * G(a + n + 2) * G(b + n + 2)
            / (mp.rf(s / 2, n + 1) * G(s) * G(a + 1) * G(b + 1))
        )

    return (
        G(s / 2) ** 2 * G((s + 1) / 2) ** 2 / (G(a + 1) * G(b + 1) * G(s))
        * (pi * gamma(a + b + 2) / (mp.mpf(2) ** (2 * n + 2 * a + 2 * b + 1) * gamma(a + 1) * gamma(b + 1))) ** (n + 1)
        * G(n + 2) * G(a + n + 1) * G(b + n + 1) * G(a + b + n + 1)
        / (mp.rf(s / 2, n + 1) * G(s / 2 + n + 1) ** 2 * G((s + 1) / 2 + n + 1) ** 2)
    )


# Printed forms stated for the unnormalized matrix; the rest are normalized.
_UNNORMALIZED_PRINTED = {Family.HERMITE, Family.LAGUERRE, Family.GEGENBAUER}

_PRINTED_FORMULA_NAMES = {
    Family.HERMITE: "hermite-superfactorial-det (unnormalized, with pi power)",
    Family.LAGUERRE: "laguerre-barnes-det (unnormalized)",
    Family.GEGENBAUER: "gegenbauer-barnes-det (unnormalized)",
    Family.JACOBI: FormulaId.JACOBI_DET_AS_PRINTED.value,
    Family.JACOBI_SHIFTED: "shifted-jacobi-barnes-det",
}


def as_printed_det(spec: FamilySpec, n: int, digits: int) -> DiscrepancyNote:
    """
    Evaluate the family's printed Barnes-G determinant formula in floating point
    and compare it with the exact Bareiss determinant. Never asserts agreement.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if digits < 1:
        raise ValueError("digits must be positive")
    exact = oracle.bareiss_det(moment_matrix(spec, n))
    family = spec.family
    notes = []

    printed_matrix_det = None
    if family == Family.JACOBI:
        try:
            printed_matrix_det = oracle.bareiss_det(printed_jacobi_matrix(spec, n))
        except ArithmeticError as exc:
            notes.append(f"printed 2F1 matrix undefined: {exc}")

    with mp.workdps(digits + 10):
        reference = _mpf(exact)
        if family in _UNNORMALIZED_PRINTED:
            reference *= unnormalized_scale(spec, digits + 10) ** (n + 1)
        try:
            printed = _printed_det(spec, n)
            if not mp.isfinite(printed):
                raise ZeroDivisionError("non-finite value")
        except (ZeroDivisionError, ValueError) as exc:
            printed = None
            notes.append(f"printed formula undefined at these parameters: {exc}")

        relative_error = None
        agrees = False
        if printed is not None:
            relative_error = abs(printed - reference) / abs(reference)
            agrees = bool(relative_error <= mp.mpf(10) ** (-(digits / mp.mpf(2))))

    if not agrees:
        logger.info("printed determinant for %s n=%d disagrees with Bareiss", spec, n)
    return DiscrepancyNote(
        spec=spec,
        n=n,
        formula_id=_PRINTED_FORMULA_NAMES[family],
        digits=digits,
        printed_value=printed,
        reference_value=reference,
        exact_value=exact,
        agrees=agrees,
        relative_error=relative_error,
        printed_matrix_det=printed_matrix_det,
        note="; ".join(notes),
    )


def as_printed_jacobi0_det(spec: FamilySpec, n: int, digits: int) -> DiscrepancyNote:
    if spec.family != Family.JACOBI:
        raise InvalidFamilySpec("the printed Jacobi determinant needs family jacobi")
    return as_printed_det(spec, n, digits)


def printed_jacobi_matrix(spec: FamilySpec, n: int) -> ExactMatrix:
    """The Jacobi 2F1 matrix with lower parameter a+b+1, exactly as printed."""
    a, b = spec.alpha, spec.beta
    entries = [hyp_terminating(k, [b + 1], [a + b + 1], 2) for k in range(2 * n + 1)]
    return ExactMatrix.from_function(n + 1, lambda i, j: entries[i + j])
