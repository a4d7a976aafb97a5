from fractions import Fraction

from django.test import SimpleTestCase

from modforms.exceptions import IdentityFailure, ValidationError
from modforms.selectors import get_generator_set
from modforms.series import FourierSeries
from modforms.services.rank_services import (
    IDENTITY_FAILURE, MATCH, POLYNOMIAL_MATCH, TRUNCATION_ARTIFACT, MonomialEvaluator, classify,
    monomials_of_weight, polynomial_rank, rank_check, span_rank,
)
from modforms.utils import linalg


class LinearAlgebraTests(SimpleTestCase):
    def test_rank_of_rational_rows(self):
        rows = [[1, Fraction(1, 2), 0], [2, 1, 0], [0, 0, Fraction(-3, 7)]]
        self.assertEqual(linalg.rank(rows), 2)
        self.assertEqual(linalg.rank([]), 0)

    def test_sparse_basis(self):
        basis = linalg.SparseBasis()
        self.assertTrue(basis.add({0: 1, 2: 1}))
        self.assertTrue(basis.add({1: 2}))
        self.assertFalse(basis.add({0: 3, 1: 4, 2: 3}))
        self.assertTrue(basis.contains({1: Fraction(1, 3)}))
        self.assertEqual(len(basis), 2)

    def test_span_rank_of_series(self):
        x = FourierSeries(2, 2, {(1, 0, 0): 1, (0, 0, 1): 2})
        y = FourierSeries(2, 2, {(1, 0, 1): 1})
        self.assertEqual(span_rank([x, y, x.scale(3) + y]), 2)
        self.assertEqual(span_rank([]), 0)


class ClassifyTests(SimpleTestCase):
    def test_match(self):
        self.assertEqual(classify(4, {7: 4, 6: 3}), MATCH)

    def test_shortfall_growing_with_precision(self):
        self.assertEqual(classify(34, {5: 30, 6: 32, 7: 33}), TRUNCATION_ARTIFACT)

    def test_shortfall_settled_by_polynomial_rank(self):
        self.assertEqual(classify(34, {5: 25, 6: 33, 7: 33}, polynomial=34), POLYNOMIAL_MATCH)
        self.assertEqual(classify(34, {5: 25, 6: 33, 7: 33}, polynomial=33), IDENTITY_FAILURE)

    def test_rank_above_target(self):
        self.assertEqual(classify(3, {7: 4}), IDENTITY_FAILURE)
        self.assertEqual(classify(3, {7: 4}, polynomial=3), IDENTITY_FAILURE)

    def test_rank_dropping_with_precision(self):
        self.assertEqual(classify(10, {5: 9, 6: 8, 7: 8}), IDENTITY_FAILURE)


class PolynomialRankTests(SimpleTestCase):
    def test_known_dimensions(self):
        expected = {1: 0, 2: 1, 4: 6, 6: 10, 8: 22, 10: 34, 11: 3}
        self.assertEqual({k: polynomial_rank(k) for k in expected}, expected)

    def test_refuses_weights_with_x_j_squared(self):
        with self.assertRaises(ValidationError):
            polynomial_rank(18)


class RankCheckTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.gens = get_generator_set()
        cls.evaluator = MonomialEvaluator(cls.gens)

    def test_matching_weights(self):
        expected = {2: 1, 4: 6, 6: 10, 8: 22, 11: 3}
        for k, dim in expected.items():
            outcome = rank_check(self.gens, k, evaluator=self.evaluator)
            self.assertEqual((outcome.rank, outcome.target), (dim, dim), k)
            self.assertEqual(outcome.classification, MATCH, k)
            self.assertEqual(outcome.status, 'pass', k)
            self.assertIsNone(outcome.polynomial_rank, k)

    def test_weight_ten_is_certified_in_polynomial_coordinates(self):
        outcome = rank_check(self.gens, 10, evaluator=self.evaluator)
        self.assertEqual((outcome.rank, outcome.target, outcome.polynomial_rank), (33, 34, 34))
        self.assertEqual(outcome.classification, POLYNOMIAL_MATCH)
        self.assertEqual(outcome.status, 'pass')
        self.assertEqual(outcome.diagnostics, {5: 25, 6: 33, 7: 33})
        self.assertIs(outcome.raise_for_failure(), outcome)

    def test_wrong_target_raises_identity_failure(self):
        outcome = rank_check(self.gens, 2, target=2, evaluator=self.evaluator)
        self.assertEqual(outcome.classification, IDENTITY_FAILURE)
        self.assertEqual(outcome.polynomial_rank, 1)
        with self.assertRaises(IdentityFailure) as ctx:
            outcome.raise_for_failure()
        self.assertEqual(ctx.exception.witness, {5: 1, 6: 1, 7: 1})

    def test_weight_with_no_monomials(self):
        outcome = rank_check(self.gens, 1, evaluator=self.evaluator)
        self.assertEqual((outcome.monomials, outcome.rank, outcome.target), (0, 0, 0))
        self.assertEqual(outcome.status, 'pass')

    def test_negative_weight(self):
        with self.assertRaises(ValidationError):
            monomials_of_weight((2, 4), -2)
