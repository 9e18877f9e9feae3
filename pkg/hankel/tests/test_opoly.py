from fractions import Fraction

from django.test import SimpleTestCase

from hankel.gram_engine import inner_product
from hankel.models import MONOMIAL, Basis, Family, FamilySpec, PolyCoeffs
from hankel.opoly import (
    SHIFTED,
    evaluate,
    from_monomials,
    gram_basis,
    norm_squared,
    poly_basis,
    poly_coeffs,
    rebase,
    special_value,
)
from hankel.oracle import REFERENCE_GRID

HERMITE = FamilySpec(Family.HERMITE)
LEGENDRE = FamilySpec(Family.JACOBI, alpha=0, beta=0)


class SpecialValueTests(SimpleTestCase):
    def test_hermite(self):
        self.assertEqual(special_value(HERMITE, 2), -2)
        self.assertEqual(special_value(HERMITE, 3), 0)
        self.assertEqual(special_value(HERMITE, 4), 12)

    def test_laguerre_is_binomial_at_zero(self):
        spec = FamilySpec(Family.LAGUERRE, alpha=Fraction(1, 2))
        self.assertEqual(special_value(spec, 2), Fraction(15, 8))

    def test_gegenbauer(self):
        spec = FamilySpec(Family.GEGENBAUER, lam=1)
        self.assertEqual(special_value(spec, 2), -1)
        self.assertEqual(special_value(spec, 1), 0)

    def test_jacobi_degree_one(self):
        spec = FamilySpec(Family.JACOBI, alpha=2, beta=3)
        self.assertEqual(special_value(spec, 1), Fraction(-1, 2))

    def test_legendre_degree_two(self):
        self.assertEqual(special_value(LEGENDRE, 2), Fraction(-1, 2))

    def test_shifted_parameters(self):
        # C^{lambda+1}_2(0) = -(lambda+1)
        spec = FamilySpec(Family.GEGENBAUER, lam=Fraction(1, 4))
        self.assertEqual(special_value(spec, 2, 1), Fraction(-5, 4))

    def test_shifted_jacobi_value_at_one(self):
        spec = FamilySpec(Family.JACOBI_SHIFTED, alpha=Fraction(1, 2), beta=0)
        self.assertEqual(special_value(spec, 2), Fraction(15, 8))


class PolyCoeffsTests(SimpleTestCase):
    def test_hermite(self):
        self.assertEqual(poly_coeffs(HERMITE, 2).coeffs, (-2, 0, 4))
        self.assertEqual(poly_coeffs(HERMITE, 3).coeffs, (0, -12, 0, 8))

    def test_laguerre(self):
        spec = FamilySpec(Family.LAGUERRE, alpha=0)
        self.assertEqual(poly_coeffs(spec, 1).coeffs, (1, -1))

    def test_gegenbauer(self):
        spec = FamilySpec(Family.GEGENBAUER, lam=1)
        self.assertEqual(poly_coeffs(spec, 2).coeffs, (-1, 0, 4))

    def test_legendre(self):
        self.assertEqual(
            poly_coeffs(LEGENDRE, 2).coeffs, (Fraction(-1, 2), 0, Fraction(3, 2))
        )

    def test_shifted_jacobi_basis(self):
        spec = FamilySpec(Family.JACOBI_SHIFTED, alpha=Fraction(1, 3), beta=Fraction(1, 5))
        poly = poly_coeffs(spec, 1)
        self.assertEqual(poly.basis, SHIFTED)
        self.assertEqual(poly.coeffs, (Fraction(4, 3), (spec.alpha + spec.beta + 2) / 2))

    def test_degree_and_leading(self):
        poly = poly_coeffs(HERMITE, 3)
        self.assertEqual(poly.degree, 3)
        self.assertEqual(poly.leading, 8)
        self.assertEqual(poly[7], 0)

    def test_leading_coefficient_must_be_nonzero(self):
        with self.assertRaises(ValueError):
            PolyCoeffs((1, 0))


class OrthogonalityTests(SimpleTestCase):
    def test_orthogonal_with_stated_norms(self):
        for spec in REFERENCE_GRID:
            basis = gram_basis(spec)
            polys = [rebase(poly_coeffs(spec, k), basis).coeffs for k in range(6)]
            for j in range(6):
                for k in range(6):
                    expected = norm_squared(spec, j) if j == k else 0
                    with self.subTest(spec=str(spec), j=j, k=k):
                        self.assertEqual(inner_product(spec, polys[j], polys[k]), expected)

    def test_hermite_norm(self):
        self.assertEqual(norm_squared(HERMITE, 2), 8)


class BasisTests(SimpleTestCase):
    def test_poly_basis(self):
        self.assertEqual(poly_basis(HERMITE), MONOMIAL)
        self.assertEqual(
            poly_basis(FamilySpec(Family.JACOBI_SHIFTED, alpha=0, beta=0)), SHIFTED
        )

    def test_evaluate(self):
        self.assertEqual(evaluate(poly_coeffs(HERMITE, 2), Fraction(1, 2)), -1)
        shifted = FamilySpec(Family.JACOBI_SHIFTED, alpha=0, beta=0)
        # P_1 = x for the Legendre weight
        self.assertEqual(evaluate(poly_coeffs(shifted, 1), Fraction(3, 7)), Fraction(3, 7))

    def test_rebase_preserves_values(self):
        basis = Basis(center=Fraction(1), scale=Fraction(-1, 2))
        poly = from_monomials([0, 2, 0, 1], basis)
        self.assertEqual(poly.basis, basis)
        for x in (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(5)):
            self.assertEqual(evaluate(poly, x), x ** 3 + 2 * x)

    def test_rebase_to_same_basis_is_identity(self):
        poly = poly_coeffs(HERMITE, 2)
        self.assertIs(rebase(poly, MONOMIAL), poly)


def hermite_by_recurrence(k_max):
    # H_{k+1} = 2x H_k - 2k H_{k-1}
    polys = [[Fraction(1)], [Fraction(0), Fraction(2)]]
    for k in range(1, k_max):
        nxt = [Fraction(0)] + [2 * c for c in polys[k]]
        for i, c in enumerate(polys[k - 1]):
            nxt[i] -= 2 * k * c
        polys.append(nxt)
    return polys[:k_max + 1]


def gegenbauer_by_recurrence(lam, k_max):
    # (k+1) C_{k+1} = 2(k+lam) x C_k - (k+2lam-1) C_{k-1}
    polys = [[Fraction(1)], [Fraction(0), 2 * lam]]
    for k in range(1, k_max):
        nxt = [Fraction(0)] + [2 * (k + lam) * c for c in polys[k]]
        for i, c in enumerate(polys[k - 1]):
            nxt[i] -= (k + 2 * lam - 1) * c
        polys.append([c / (k + 1) for c in nxt])
    return polys[:k_max + 1]


class RecurrenceTests(SimpleTestCase):
    def test_hermite(self):
        for k, coeffs in enumerate(hermite_by_recurrence(20)):
            with self.subTest(k=k):
                self.assertEqual(poly_coeffs(HERMITE, k).coeffs, tuple(coeffs))
                self.assertEqual(special_value(HERMITE, k), coeffs[0])

    def test_gegenbauer(self):
        for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            spec = FamilySpec(Family.GEGENBAUER, lam=lam)
            for k, coeffs in enumerate(gegenbauer_by_recurrence(lam, 20)):
                with self.subTest(lam=lam, k=k):
                    self.assertEqual(poly_coeffs(spec, k).coeffs, tuple(coeffs))
                    self.assertEqual(special_value(spec, k), coeffs[0])


class AnchorValueTests(SimpleTestCase):
    def test_special_value_is_coefficient_evaluation(self):
        for spec in REFERENCE_GRID:
            anchor = Fraction(1) if spec.family == Family.JACOBI_SHIFTED else Fraction(0)
            for shift in range(4):
                for k in range(13):
                    with self.subTest(spec=str(spec), shift=shift, k=k):
                        self.assertEqual(
                            special_value(spec, k, shift),
                            evaluate(poly_coeffs(spec.shifted(shift), k), anchor),
                        )
