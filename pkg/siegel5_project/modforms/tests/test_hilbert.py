import sympy as sp
from django.test import SimpleTestCase, override_settings

from modforms.exceptions import ValidationError
from modforms.series import RationalFunction, is_palindromic
from modforms.services.hilbert_services import (
    KNOWN_DIMENSIONS, PALINDROMIC_FACTOR, bi_consistency, classical_cusp_dim, classical_modular_dim,
    expand_rational, known_dimension_mismatches, meromorphic_domination, siegel_dim, siegel_dims,
)


class HilbertSeriesTests(SimpleTestCase):
    def test_known_dimensions(self):
        dims = siegel_dims(19)
        self.assertEqual(dims[0], 1)
        self.assertEqual(dims[1:], [KNOWN_DIMENSIONS[k] for k in range(1, 20)])
        self.assertEqual(known_dimension_mismatches(), {})

    def test_odd_weights(self):
        self.assertEqual([siegel_dim(k) for k in (9, 11, 13, 15)], [0, 3, 6, 16])

    def test_palindromic_numerator_factor(self):
        self.assertTrue(is_palindromic(PALINDROMIC_FACTOR))
        self.assertEqual(len(PALINDROMIC_FACTOR), 15)
        self.assertFalse(is_palindromic([1, 2, 3]))

    def test_negative_weight(self):
        with self.assertRaises(ValidationError):
            siegel_dim(-1)

    @override_settings(SIEGEL5={'VERSION': 'test', 'TRUNCATION': 7, 'MAX_SERIES_ORDER': 10,
                                'DATA_DIR': '', 'PARALLEL_SUITES': False})
    def test_expansion_cap(self):
        with self.assertRaises(ValidationError):
            expand_rational(RationalFunction([1], [1, -1]), 11)
        self.assertEqual(expand_rational(RationalFunction([1], [1, -1]), 3), [1, 1, 1, 1])

    def test_holomorphic_below_meromorphic(self):
        self.assertEqual(meromorphic_domination(15), {})


class RationalFunctionTests(SimpleTestCase):
    def test_expand_geometric_series(self):
        self.assertEqual(RationalFunction([1], [1, 0, -1]).expand(5), [1, 0, 1, 0, 1, 0])

    def test_not_expandable(self):
        with self.assertRaises(ValidationError):
            RationalFunction([1], [0, 1]).expand(2)
        with self.assertRaises(ValidationError):
            RationalFunction([1], [0])

    def test_from_sympy_expression(self):
        t = sp.Symbol('t')
        function = RationalFunction.from_expr((1 + t**2) / (1 - t)**2)
        self.assertEqual(function.expand(4), [1, 2, 4, 6, 8])


class ClassicalDimensionTests(SimpleTestCase):
    def test_gamma0_5(self):
        self.assertEqual([classical_cusp_dim(k) for k in (4, 6, 8, 10, 12)], [1, 1, 3, 3, 5])
        self.assertEqual(classical_modular_dim(4), 3)

    def test_odd_or_small_weight(self):
        for k in (2, 3, 5):
            with self.assertRaises(ValidationError):
                classical_cusp_dim(k)

    def test_implied_cusp_dimensions(self):
        rows = bi_consistency(12)
        self.assertEqual([r.implied_cusp for r in rows], [1, 5, 13, 25, 44])
        self.assertTrue(all(r.passed for r in rows))
        with self.assertRaises(ValidationError):
            bi_consistency(3)
