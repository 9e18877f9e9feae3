# hankel/oracle.py
"""
Formula-independent exact linear algebra, and the cross-checks that judge the
closed forms against it.
"""
import logging
import math
from fractions import Fraction

from . import families
from .exceptions import NotPositiveDefinite, SingularMatrix
from .gram_engine import det_from_norms, gram_schmidt, kernel_inverse, moment_matrix
from .models import Basis, Check, ExactMatrix, Family, FamilySpec, VerifyReport

logger = logging.getLogger(__name__)

REFERENCE_GRID = (
    FamilySpec(Family.HERMITE),
    *(FamilySpec(Family.LAGUERRE, alpha=a) for a in ("-1/2", "0", "1/2", "1", "7/3")),
    *(FamilySpec(Family.GEGENBAUER, lam=lam) for lam in ("1/4", "1/2", "1", "3/2")),
    *(
        FamilySpec(family, alpha=a, beta=b)
        for family in (Family.JACOBI, Family.JACOBI_SHIFTED)
        for a, b in (("0", "0"), ("1/2", "-1/2"), ("2", "3"), ("1/3", "1/5"))
    ),
)

# moments of odd order vanish for the symmetric weights
PARITY_FAMILIES = {Family.HERMITE, Family.GEGENBAUER}


def bareiss_det(matrix: ExactMatrix) -> Fraction:
    """
    Fraction-free elimination. Each row is first cleared of denominators, so
    every intermediate entry is an integer minor and each division is exact.
    """
    size = matrix.size
    rows = []
    multiplier = 1
    for row in matrix.rows():
        lcm = math.lcm(*(x.denominator for x in row))
        rows.append([x.numerator * (lcm // x.denominator) for x in row])
        multiplier *= lcm

    sign = 1
    previous = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]) // previous
            rows[i][k] = 0
        previous = pivot

    return Fraction(sign * rows[-1][-1], multiplier)


def gauss_inverse(matrix: ExactMatrix) -> ExactMatrix:
    size = matrix.size
    # augmented [M | I]
    rows = [
        row + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix.rows())
    ]
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {col}")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        rows[col] = [x / pivot for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [x - factor * p for x, p in zip(rows[r], rows[col])]
    return ExactMatrix([row[size:] for row in rows])


def bordered_kernel(matrix: ExactMatrix, basis: Basis, x, y) -> Fraction:
    """
    Kernel value as a ratio of determinants:

        k_n(x, y) = -det [[0, W(y)^T], [W(x), M]] / det M

    with W(t) = (w_0(t), ..., w_n(t)). Two Bareiss eliminations per call.
    """
    size = matrix.size
    wx = [basis.element(i, x) for i in range(size)]
    wy = [basis.element(i, y) for i in range(size)]
    bordered = ExactMatrix(
        [[Fraction(0)] + wy] + [[wx[i]] + row for i, row in enumerate(matrix.rows())]
    )
    return -bareiss_det(bordered) / bareiss_det(matrix)


def _compare(name: str, expected: ExactMatrix, actual: ExactMatrix) -> Check:
    where = expected.first_difference(actual)
    if where is None:
        return Check(name, True)
    i, j = where
    return Check(name, False, i, j, expected[i, j], actual[i, j])


def _compare_scalar(name: str, expected: Fraction, actual: Fraction) -> Check:
    if expected == actual:
        return Check(name, True)
    return Check(name, False, expected=expected, actual=actual)


def _symmetry(name: str, matrix: ExactMatrix) -> Check:
    return _compare(name, matrix, matrix.transpose())


def _parity(name: str, matrix: ExactMatrix) -> Check:
    for i in range(matrix.size):
        for j in range(matrix.size):
            if (i + j) % 2 and matrix[i, j] != 0:
                return Check(name, False, i, j, Fraction(0), matrix[i, j])
    return Check(name, True)


def verify(spec: FamilySpec, n: int) -> VerifyReport:
    """Cross-check the closed forms for `spec` at size n+1; never raises on a mismatch."""
    if n < 0:
        raise ValueError("n must be >= 0")
    matrix = moment_matrix(spec, n)
    identity = ExactMatrix.identity(n + 1)
    checks = []

    bareiss = bareiss_det(matrix)
    checks.append(
        Check("moment-matrix-positive-definite", bareiss > 0, actual=bareiss)
    )

    explicit_inv = families.explicit_inverse(spec, n)
    checks.append(_compare("explicit-inverse-times-moments", identity, explicit_inv @ matrix))

    try:
        table = gram_schmidt(spec, n)
    except NotPositiveDefinite as exc:
        logger.warning("verify %s n=%d: %s", spec, n, exc)
        table = None
        checks.append(Check("gram-schmidt-norms-positive", False, actual=Fraction(0)))

    if table is not None:
        checks.append(_compare("explicit-equals-kernel-inverse", explicit_inv, kernel_inverse(table)))

    try:
        oracle_inv = gauss_inverse(matrix)
    except SingularMatrix:
        checks.append(Check("gauss-inverse-exists", False, actual=bareiss))
    else:
        checks.append(_compare("explicit-equals-gauss-inverse", explicit_inv, oracle_inv))

    explicit = families.explicit_det(spec, n)
    if table is not None:
        checks.append(_compare_scalar("explicit-det-equals-norm-product", explicit, det_from_norms(table)))
    checks.append(_compare_scalar("explicit-det-equals-bareiss", explicit, bareiss))

    checks.append(_symmetry("moment-matrix-symmetric", matrix))
    checks.append(_symmetry("explicit-inverse-symmetric", explicit_inv))
    if spec.family in PARITY_FAMILIES:
        checks.append(_parity("moment-matrix-parity", matrix))
        checks.append(_parity("explicit-inverse-parity", explicit_inv))

    report = VerifyReport(spec=spec, n=n, checks=tuple(checks))
    if not report.passed:
        logger.warning(
            "verify %s n=%d failed: %s", spec, n, ", ".join(c.name for c in report.failures)
        )
    return report


def verify_grid(max_n: int, specs=REFERENCE_GRID) -> list:
    """verify() at every spec and n = 0..max_n, in grid order."""
    return [verify(spec, n) for spec in specs for n in range(max_n + 1)]
