# hankel/gram_engine.py
"""
Generic orthogonal-polynomial machinery over a moment sequence.

The engine never looks at x directly: it works on coefficient vectors in the
family's Gram basis w_i and on the moments <w_a, w_b> = moment(a + b) of the
normalized measure. From those it builds the monic orthogonal table, the
inverse Gram matrix as the coefficient matrix of the kernel polynomial
k_n(x, y) = sum_m p_m(x) p_m(y), and the determinant as the product of norms.
"""
import logging
from fractions import Fraction
from typing import Sequence

from .exact_arith import binomial, hyp_terminating, pochhammer
from .exceptions import NotPositiveDefinite
from .models import Basis, ExactMatrix, Family, FamilySpec, OrthoTable, PolyCoeffs, as_rational
from .opoly import evaluate, gram_basis

logger = logging.getLogger(__name__)


def moment(spec: FamilySpec, k: int) -> Fraction:
    """k-th moment of the normalized measure in the Gram-basis variable."""
    if k < 0:
        raise ValueError("moment index must be >= 0")
    family = spec.family

    if family == Family.HERMITE:
        return Fraction(0) if k % 2 else pochhammer(Fraction(1, 2), k // 2)

    if family == Family.LAGUERRE:
        return pochhammer(spec.alpha + 1, k)

    if family == Family.GEGENBAUER:
        if k % 2:
            return Fraction(0)
        m = k // 2
        return pochhammer(Fraction(1, 2), m) / pochhammer(spec.lam + 1, m)

    a, b = spec.alpha, spec.beta
    if family == Family.JACOBI:
        # moment of (-x)^k
        return hyp_terminating(k, [b + 1], [a + b + 2], 2)

    # moment of ((1-x)/2)^k
    return pochhammer(a + 1, k) / pochhammer(a + b + 2, k)


def raw_moment(spec: FamilySpec, k: int) -> Fraction:
    """Normalized moment of x^k, whatever the family's Gram basis."""
    basis = gram_basis(spec)
    # x = center + u / scale
    total = Fraction(0)
    for r in range(k + 1):
        total += (
            binomial(k, r) * basis.center ** (k - r)
            * moment(spec, r) / basis.scale ** r
        )
    return total


def moment_matrix(spec: FamilySpec, n: int) -> ExactMatrix:
    """(n+1) x (n+1) Hankel matrix of normalized moments, (0, 0) entry 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    moments = [moment(spec, k) for k in range(2 * n + 1)]
    return ExactMatrix.from_function(n + 1, lambda i, j: moments[i + j])


def inner_product(spec: FamilySpec, p: Sequence, q: Sequence) -> Fraction:
    """<p, q> for coefficient vectors in the Gram basis."""
    p = [as_rational(c) for c in p]
    q = [as_rational(c) for c in q]
    moments = [moment(spec, k) for k in range(len(p) + len(q) - 1)]
    return sum(
        (pa * qb * moments[a + b] for a, pa in enumerate(p) if pa for b, qb in enumerate(q) if qb),
        Fraction(0),
    )


def gram_schmidt(spec: FamilySpec, n: int) -> OrthoTable:
    """
    Monic orthogonal polynomials of degree 0..n and their norms, by classical
    Gram–Schmidt on the Gram basis under the moment inner product.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    moments = [moment(spec, k) for k in range(2 * n + 1)]

    monic = []
    norms = []
    for m in range(n + 1):
        coeffs = [Fraction(0)] * m + [Fraction(1)]
        for prev, h in zip(monic, norms):
            # <w_m, monic_j> / h_j
            projection = sum(
                (c * moments[m + b] for b, c in enumerate(prev.coeffs)), Fraction(0)
            ) / h
            if projection:
                for b, c in enumerate(prev.coeffs):
                    coeffs[b] -= projection * c
        # monic_m is orthogonal to lower degrees, so <monic_m, monic_m> = <monic_m, w_m>
        norm = sum((c * moments[m + b] for b, c in enumerate(coeffs)), Fraction(0))
        if norm <= 0:
            raise NotPositiveDefinite(
                f"degree {m} norm {norm} is not positive for {spec}"
            )
        monic.append(PolyCoeffs(tuple(coeffs), gram_basis(spec)))
        norms.append(norm)

    logger.debug("gram_schmidt %s n=%d norms=%s", spec, n, [str(h) for h in norms])
    return OrthoTable(n=n, basis=gram_basis(spec), monic=tuple(monic), norms=tuple(norms))


def kernel_inverse(table: OrthoTable) -> ExactMatrix:
    """B(j, k) = sum_m a_{m,j} a_{m,k} / h_m, the inverse Gram matrix."""
    size = table.n + 1
    entries = [[Fraction(0)] * size for _ in range(size)]
    for poly, h in zip(table.monic, table.norms):
        coeffs = poly.coeffs
        for j, cj in enumerate(coeffs):
            if not cj:
                continue
            scaled = cj / h
            for k, ck in enumerate(coeffs):
                entries[j][k] += scaled * ck
    return ExactMatrix(entries)


def kernel_eval(table: OrthoTable, x, y) -> Fraction:
    """k_n(x, y) = sum_m monic_m(x) monic_m(y) / h_m (everything is real)."""
    return sum(
        (evaluate(poly, x) * evaluate(poly, y) / h for poly, h in zip(table.monic, table.norms)),
        Fraction(0),
    )


def kernel_coeffs(table: OrthoTable, y) -> list:
    """Coefficients of x -> k_n(x, y) in the Gram basis."""
    out = [Fraction(0)] * (table.n + 1)
    for poly, h in zip(table.monic, table.norms):
        weight = evaluate(poly, y) / h
        if weight:
            for b, c in enumerate(poly.coeffs):
                out[b] += weight * c
    return out


def kernel_from_inverse(inverse: ExactMatrix, basis: Basis, x, y) -> Fraction:
    """sum_{j,k} beta_jk w_j(y) w_k(x) for an inverse Gram matrix."""
    wx = [basis.element(k, x) for k in range(inverse.size)]
    wy = [basis.element(j, y) for j in range(inverse.size)]
    return sum(
        (inverse[j, k] * wy[j] * wx[k] for j in range(inverse.size) for k in range(inverse.size)),
        Fraction(0),
    )


def det_from_norms(table: OrthoTable) -> Fraction:
    """Delta_n = prod_m h_m (h_0 = 1 under the normalized measure)."""
    result = Fraction(1)
    for h in table.norms:
        result *= h
    return result


def leading_coefficient_squared(table: OrthoTable, m: int) -> Fraction:
    """gamma_m^2 = Delta_{m-1} / Delta_m = 1 / h_m for the orthonormal p_m."""
    return 1 / table.norms[m]
