# hankel/opoly.py
"""
Closed-form data for the five classical families: values at the anchor
point, coefficient vectors, and norms under the probability-normalized measure.

All quantities live under the normalized measure (total mass 1):

    hermite         exp(-x^2) / sqrt(pi)                 on R
    laguerre        x^a exp(-x) / Gamma(a+1)             on (0, inf)
    gegenbauer      (1-x^2)^(l-1/2) / B(1/2, l+1/2)      on (-1, 1)
    jacobi          (1-x)^a (1+x)^b / mass               on (-1, 1)
    jacobi-shifted  same measure, polynomials in powers of (x-1)
"""
from fractions import Fraction
from functools import lru_cache

from .exact_arith import binomial, factorial, hyp_terminating, pochhammer
from .models import MONOMIAL, Basis, Family, FamilySpec, PolyCoeffs, as_rational

SHIFTED = Basis(center=Fraction(1), scale=Fraction(1))

# Gram bases: Jacobi moments are taken in -x so the moment matrix has the
# terminating 2F1 entries; shifted Jacobi uses t = (1-x)/2 so its moment
# matrix is (a+1)_{i+j} / (a+b+2)_{i+j}.
_GRAM_BASES = {
    Family.HERMITE: MONOMIAL,
    Family.LAGUERRE: MONOMIAL,
    Family.GEGENBAUER: MONOMIAL,
    Family.JACOBI: Basis(center=Fraction(0), scale=Fraction(-1)),
    Family.JACOBI_SHIFTED: Basis(center=Fraction(1), scale=Fraction(-1, 2)),
}


def poly_basis(spec: FamilySpec) -> Basis:
    """Basis of the coefficient vectors returned by `poly_coeffs`."""
    return SHIFTED if spec.family == Family.JACOBI_SHIFTED else MONOMIAL


def gram_basis(spec: FamilySpec) -> Basis:
    """Basis whose normalized Gram matrix is the family's moment matrix."""
    return _GRAM_BASES[spec.family]


def jacobi_weight(spec: FamilySpec, k: int) -> Fraction:
    """
    (2k+a+b+1) (a+b+1)_k / (a+b+1), cancelled so it stays defined at a+b+1 = 0.
    """
    if k == 0:
        return Fraction(1)
    ab = spec.alpha + spec.beta
    return (2 * k + ab + 1) * pochhammer(ab + 2, k - 1)


@lru_cache(maxsize=4096)
def special_value(spec: FamilySpec, k: int, shift: int = 0) -> Fraction:
    """
    Degree-k family polynomial with parameters raised by `shift`, evaluated at
    the anchor (1 for jacobi-shifted, 0 otherwise).
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    family = spec.family
    spec = spec.shifted(shift)

    if family == Family.HERMITE:
        if k % 2:
            return Fraction(0)
        m = k // 2
        return (-1) ** m * factorial(2 * m) / factorial(m)

    if family == Family.LAGUERRE:
        return pochhammer(spec.alpha + 1, k) / factorial(k)

    if family == Family.GEGENBAUER:
        if k % 2:
            return Fraction(0)
        m = k // 2
        return (-1) ** m * pochhammer(spec.lam, m) / factorial(m)

    if family == Family.JACOBI:
        a, b = spec.alpha, spec.beta
        return (
            pochhammer(a + 1, k) / factorial(k)
            * hyp_terminating(k, [k + a + b + 1], [a + 1], Fraction(1, 2))
        )

    # jacobi-shifted: value at x = 1
    return pochhammer(spec.alpha + 1, k) / factorial(k)


def poly_coeffs(spec: FamilySpec, k: int) -> PolyCoeffs:
    """Coefficients of the standard degree-k polynomial in `poly_basis(spec)`."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    family = spec.family
    coeffs = [Fraction(0)] * (k + 1)

    if family == Family.HERMITE:
        # H_k(x) = sum_m (-1)^m k! / (m! (k-2m)!) (2x)^(k-2m)
        for m in range(k // 2 + 1):
            power = k - 2 * m
            coeffs[power] = (
                (-1) ** m * factorial(k) * 2 ** power
                / (factorial(m) * factorial(power))
            )

    elif family == Family.LAGUERRE:
        a = spec.alpha
        lead = pochhammer(a + 1, k) / factorial(k)
        for i in range(k + 1):
            coeffs[i] = lead * pochhammer(-k, i) / (pochhammer(a + 1, i) * factorial(i))

    elif family == Family.GEGENBAUER:
        # C_k(x) = sum_m (-1)^m (l)_{k-m} / (m! (k-2m)!) (2x)^(k-2m)
        lam = spec.lam
        for m in range(k // 2 + 1):
            power = k - 2 * m
            coeffs[power] = (
                (-1) ** m * pochhammer(lam, k - m) * 2 ** power
                / (factorial(m) * factorial(power))
            )

    else:
        # Jacobi: (a+1)_k/k! sum_m (-k)_m (k+a+b+1)_m / ((a+1)_m m!) s^m, s = (1-x)/2
        a, b = spec.alpha, spec.beta
        lead = pochhammer(a + 1, k) / factorial(k)
        s_coeffs = [
            lead * pochhammer(-k, m) * pochhammer(k + a + b + 1, m)
            / (pochhammer(a + 1, m) * factorial(m))
            for m in range(k + 1)
        ]
        if family == Family.JACOBI_SHIFTED:
            # s = -(x-1)/2
            coeffs = [c * Fraction(-1, 2) ** m for m, c in enumerate(s_coeffs)]
        else:
            # s^m = 2^-m sum_i C(m,i) (-x)^i
            for m, c in enumerate(s_coeffs):
                for i in range(m + 1):
                    coeffs[i] += c * binomial(m, i) * (-1) ** i / 2 ** m

    return PolyCoeffs(tuple(coeffs), poly_basis(spec))


def norm_squared(spec: FamilySpec, m: int) -> Fraction:
    """<P_m, P_m> for the standard polynomial under the normalized measure."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    family = spec.family

    if family == Family.HERMITE:
        return Fraction(2) ** m * factorial(m)

    if family == Family.LAGUERRE:
        return pochhammer(spec.alpha + 1, m) / factorial(m)

    if family == Family.GEGENBAUER:
        lam = spec.lam
        result = Fraction(1)
        for r in range(1, m + 1):
            result *= (2 * lam + r - 1) * (lam + r - 1) / (r * (lam + r))
        return result

    a, b = spec.alpha, spec.beta
    return (
        pochhammer(a + 1, m) * pochhammer(b + 1, m)
        / (factorial(m) * jacobi_weight(spec, m))
    )


def evaluate(poly: PolyCoeffs, x) -> Fraction:
    """Horner evaluation in the polynomial's own basis variable."""
    u = poly.basis.variable(x)
    result = Fraction(0)
    for c in reversed(poly.coeffs):
        result = result * u + c
    return result


def rebase(poly: PolyCoeffs, basis: Basis) -> PolyCoeffs:
    """Re-express `poly` in `basis` (any center, any nonzero scale)."""
    if poly.basis == basis:
        return poly
    # x - c_old = u / s_new + (c_new - c_old), u = s_new (x - c_new)
    shift = basis.center - poly.basis.center
    out = [Fraction(0)] * (poly.degree + 1)
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        weight = c * poly.basis.scale ** i
        for r in range(i + 1):
            out[r] += weight * binomial(i, r) * shift ** (i - r) / basis.scale ** r
    return PolyCoeffs(tuple(out), basis)


def from_monomials(coeffs, basis: Basis) -> PolyCoeffs:
    """Polynomial given by ordinary monomial coefficients, expressed in `basis`."""
    return rebase(PolyCoeffs(tuple(as_rational(c) for c in coeffs), MONOMIAL), basis)
