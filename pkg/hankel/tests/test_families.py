from fractions import Fraction

from django.test import SimpleTestCase
from mpmath import mp

from hankel.exceptions import InvalidFamilySpec
from hankel.families import (
    as_float,
    as_printed_det,
    as_printed_jacobi0_det,
    explicit_det,
    explicit_inverse,
    explicit_result,
    printed_jacobi_matrix,
    unnormalized_scale,
)
from hankel.gram_engine import moment_matrix
from hankel.models import ExactMatrix, Family, FamilySpec, FormulaId
from hankel.oracle import REFERENCE_GRID, bareiss_det

HERMITE = FamilySpec(Family.HERMITE)
HILBERT = FamilySpec(Family.JACOBI_SHIFTED, alpha=0, beta=0)
LEGENDRE = FamilySpec(Family.JACOBI, alpha=0, beta=0)


class ExplicitDetTests(SimpleTestCase):
    def test_spot_values(self):
        self.assertEqual(explicit_det(HERMITE, 2), Fraction(1, 4))
        self.assertEqual(explicit_det(FamilySpec(Family.LAGUERRE, alpha=0), 1), 1)
        self.assertEqual(explicit_det(HILBERT, 2), Fraction(1, 2160))
        self.assertEqual(explicit_det(LEGENDRE, 1), Fraction(1, 3))

    def test_size_one(self):
        for spec in REFERENCE_GRID:
            self.assertEqual(explicit_det(spec, 0), 1)

    def test_matches_bareiss(self):
        for spec in REFERENCE_GRID:
            for n in range(7):
                with self.subTest(spec=str(spec), n=n):
                    self.assertEqual(explicit_det(spec, n), bareiss_det(moment_matrix(spec, n)))

    def test_defined_when_alpha_plus_beta_is_minus_one(self):
        spec = FamilySpec(Family.JACOBI, alpha=Fraction(-1, 2), beta=Fraction(-1, 2))
        self.assertEqual(explicit_det(spec, 3), bareiss_det(moment_matrix(spec, 3)))

    def test_negative_n(self):
        with self.assertRaises(ValueError):
            explicit_det(HERMITE, -1)


class ExplicitInverseTests(SimpleTestCase):
    def test_hermite(self):
        self.assertEqual(
            explicit_inverse(HERMITE, 2),
            ExactMatrix([[Fraction(3, 2), 0, -1], [0, 2, 0], [-1, 0, 2]]),
        )

    def test_laguerre(self):
        spec = FamilySpec(Family.LAGUERRE, alpha=0)
        self.assertEqual(explicit_inverse(spec, 1), ExactMatrix([[2, -1], [-1, 1]]))

    def test_legendre(self):
        self.assertEqual(explicit_inverse(LEGENDRE, 1), ExactMatrix([[1, 0], [0, 3]]))

    def test_hilbert(self):
        self.assertEqual(explicit_inverse(HILBERT, 1), ExactMatrix([[4, -6], [-6, 12]]))
        for n in range(7):
            inverse = explicit_inverse(HILBERT, n)
            self.assertTrue(all(x.denominator == 1 for row in inverse.rows() for x in row))

    def test_inverts_moment_matrix(self):
        for spec in REFERENCE_GRID:
            for n in range(6):
                with self.subTest(spec=str(spec), n=n):
                    product = explicit_inverse(spec, n) @ moment_matrix(spec, n)
                    self.assertEqual(product, ExactMatrix.identity(n + 1))

    def test_symmetric(self):
        for spec in REFERENCE_GRID:
            self.assertTrue(explicit_inverse(spec, 4).is_symmetric())

    def test_formula_ids(self):
        self.assertEqual(explicit_result(HERMITE, 2, "det").formula_id, FormulaId.HERMITE_DET)
        result = explicit_result(HILBERT, 1, "inv")
        self.assertEqual(result.formula_id, FormulaId.SHIFTED_JACOBI_INVERSE)
        self.assertTrue(result.normalized)
        with self.assertRaises(ValueError):
            explicit_result(HERMITE, 1, "gen")


class FloatPathTests(SimpleTestCase):
    def test_as_float(self):
        self.assertEqual(mp.nstr(as_float(Fraction(1, 3), 10), 10), "0.3333333333")
        self.assertEqual(float(as_float(Fraction(1, 4), 17)), 0.25)

    def test_as_float_rejects_floats(self):
        with self.assertRaises(TypeError):
            as_float(0.25, 17)

    def test_hermite_scale(self):
        self.assertEqual(mp.nstr(unnormalized_scale(HERMITE, 20), 20), "1.7724538509055160273")

    def test_scales(self):
        with mp.workdps(30):
            cases = [
                (FamilySpec(Family.LAGUERRE, alpha=0), 1),
                (FamilySpec(Family.LAGUERRE, alpha=Fraction(1, 2)), mp.sqrt(mp.pi) / 2),
                (FamilySpec(Family.GEGENBAUER, lam=Fraction(1, 2)), 2),
                (FamilySpec(Family.GEGENBAUER, lam=1), mp.pi / 2),
                (LEGENDRE, 2),
                (FamilySpec(Family.JACOBI_SHIFTED, alpha=1, beta=0), 2),
            ]
            for spec, expected in cases:
                with self.subTest(spec=str(spec)):
                    self.assertTrue(mp.almosteq(unnormalized_scale(spec, 30), expected, rel_eps=mp.mpf(10) ** -25))

    def test_invalid_digits(self):
        with self.assertRaises(ValueError):
            unnormalized_scale(HERMITE, 0)


class PrintedDeterminantTests(SimpleTestCase):
    def test_hermite_and_laguerre_agree(self):
        specs = (HERMITE, FamilySpec(Family.LAGUERRE, alpha=Fraction(1, 2)), FamilySpec(Family.LAGUERRE, alpha=2))
        for spec in specs:
            for n in range(5):
                with self.subTest(spec=str(spec), n=n):
                    note = as_printed_det(spec, n, 30)
                    self.assertTrue(note.agrees)
                    self.assertEqual(note.exact_value, explicit_det(spec, n))

    def test_jacobi_note_reports_printed_matrix(self):
        note = as_printed_jacobi0_det(LEGENDRE, 1, 30)
        self.assertEqual(note.formula_id, FormulaId.JACOBI_DET_AS_PRINTED.value)
        self.assertEqual(note.exact_value, Fraction(1, 3))
        # with lower parameter a+b+1 the Legendre matrix is [[1,-1],[-1,1]]
        self.assertEqual(note.printed_matrix_det, 0)
        self.assertEqual(printed_jacobi_matrix(LEGENDRE, 1), ExactMatrix([[1, -1], [-1, 1]]))

    def test_jacobi_runs_off_the_symmetric_point(self):
        spec = FamilySpec(Family.JACOBI, alpha=Fraction(1, 2), beta=Fraction(-1, 2))
        note = as_printed_det(spec, 2, 30)
        self.assertEqual(note.exact_value, bareiss_det(moment_matrix(spec, 2)))
        self.assertIsNotNone(note.printed_value)

    def test_undefined_printed_form(self):
        spec = FamilySpec(Family.JACOBI, alpha=Fraction(-1, 2), beta=Fraction(-1, 2))
        note = as_printed_det(spec, 2, 30)
        self.assertIsNone(note.printed_value)
        self.assertFalse(note.agrees)
        self.assertIsNone(note.printed_matrix_det)
        self.assertTrue(note.note)

    def test_jacobi_only(self):
        with self.assertRaises(InvalidFamilySpec):
            as_printed_jacobi0_det(HERMITE, 2, 30)


class FloatFidelityTests(SimpleTestCase):
    """17-digit conversions stay within 1e-10 relative of the exact values."""

    def assertFloatClose(self, value):
        approx = as_float(value, 17)
        with mp.workdps(40):
            exact = as_float(value, 40)
            if exact == 0:
                self.assertEqual(approx, 0)
            else:
                self.assertLessEqual(abs((approx - exact) / exact), mp.mpf(10) ** -10)

    def test_reference_grid(self):
        for spec in REFERENCE_GRID:
            for n in range(13):
                with self.subTest(spec=str(spec), n=n):
                    self.assertFloatClose(explicit_det(spec, n))
                    for row in explicit_inverse(spec, n).rows():
                        for value in row:
                            self.assertFloatClose(value)
                    for row in moment_matrix(spec, n).rows():
                        for value in row:
                            self.assertFloatClose(value)
