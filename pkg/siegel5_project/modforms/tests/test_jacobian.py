from fractions import Fraction

from django.test import SimpleTestCase

from modforms.exceptions import ValidationError, WeightMismatchError
from modforms.selectors import get_generator_set, get_jacobian_polynomial
from modforms.series import FourierSeries, GradedPoly
from modforms.services.jacobian_services import (
    compare_up_to_scalar, jacobian, jacobian_square_check, jacobian_valuation,
)
from modforms.services.polynomial_services import poly_eval


class JacobianTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.gens = get_generator_set()

    def test_leading_terms(self):
        valuation, leading = jacobian_valuation(self.gens.J)
        self.assertEqual(valuation, 4)
        self.assertEqual(leading[(2, 1, 2)], -1)
        self.assertEqual(leading[(2, -1, 2)], 1)

    def test_antisymmetric_in_b(self):
        J = self.gens.J
        for a, b, c in J.support():
            self.assertEqual(J[(a, -b, c)], -J[(a, b, c)])

    def test_weight_is_sum_plus_three(self):
        self.assertEqual(self.gens.J.weight, 9)

    def test_swapping_arguments_changes_sign(self):
        f1, f2, g1, g2 = self.gens.truncated(5).basic()
        self.assertEqual(jacobian([f2, f1, g1, g2], [1, 1, 2, 2]), -jacobian([f1, f2, g1, g2], [1, 1, 2, 2]))

    def test_argument_validation(self):
        f1, f2, g1, g2 = self.gens.basic()
        with self.assertRaises(ValidationError):
            jacobian([f1, f2, g1], [1, 1, 2])
        with self.assertRaises(WeightMismatchError):
            jacobian([f1, f2, g1, g2], [1, 1, 2, 3])
        with self.assertRaises(ValidationError):
            jacobian([f1.truncated(5), f2, g1, g2], [1, 1, 2, 2])

    def test_square_identity_is_undetermined_at_table_precision(self):
        result = jacobian_square_check(self.gens.J, get_jacobian_polynomial(), self.gens)
        self.assertTrue(result.passed)
        self.assertIsNone(result.scalar)
        self.assertFalse(result.determined)

    def test_altered_relation_is_rejected(self):
        relation = get_jacobian_polynomial() + GradedPoly.monomial((6, 0, 6, 0))
        evaluated = poly_eval(relation, self.gens)
        result = jacobian_square_check(self.gens.J, relation, self.gens)
        self.assertFalse(result.passed)
        self.assertEqual(result.scalar, 0)
        self.assertNotEqual(evaluated[result.witness], 0)


class CompareUpToScalarTests(SimpleTestCase):
    def test_finds_scalar(self):
        rhs = FourierSeries(2, 3, {(1, 0, 1): 2, (1, 1, 1): 3})
        result = compare_up_to_scalar(rhs.scale(Fraction(-3, 2)), rhs)
        self.assertTrue(result.passed)
        self.assertEqual(result.scalar, Fraction(-3, 2))

    def test_reports_first_disagreement(self):
        rhs = FourierSeries(2, 3, {(1, 0, 1): 2, (1, 1, 1): 3})
        lhs = FourierSeries(2, 3, {(1, 0, 1): 4, (1, 1, 1): 5})
        result = compare_up_to_scalar(lhs, rhs)
        self.assertFalse(result.passed)
        self.assertEqual(result.scalar, 2)
        self.assertEqual(result.witness, (1, 1, 1))

    def test_both_zero_passes_without_scalar(self):
        result = compare_up_to_scalar(FourierSeries.zero(2, 3), FourierSeries.zero(2, 3))
        self.assertTrue(result.passed)
        self.assertIsNone(result.scalar)

    def test_nonzero_against_zero_fails(self):
        result = compare_up_to_scalar(FourierSeries(2, 3, {(1, 0, 1): 1}), FourierSeries.zero(2, 3))
        self.assertFalse(result.passed)
        self.assertEqual(result.witness, (1, 0, 1))

    def test_zero_against_nonzero_fails(self):
        rhs = FourierSeries(2, 3, {(1, 0, 1): 1, (1, 1, 1): 2})
        result = compare_up_to_scalar(FourierSeries.zero(2, 3), rhs)
        self.assertFalse(result.passed)
        self.assertEqual(result.scalar, 0)
        self.assertEqual(result.witness, (1, 0, 1))
