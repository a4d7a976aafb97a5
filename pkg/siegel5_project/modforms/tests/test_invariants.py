from django.test import SimpleTestCase

from modforms.exceptions import ValidationError
from modforms.series import EPS2, EPS4, TRIVIAL
from modforms.services.invariant_services import (
    character_index, character_sum_rule, generators_span_check, meromorphic_dimensions,
    minimal_generator_degrees, molien_series, reynolds_dimensions,
)
from modforms.services.polynomial_services import INVARIANT_GENERATORS
from modforms.utils.monomials import count_free_monomials, monomials_of_weight


class MolienSeriesTests(SimpleTestCase):
    def test_trivial_group_counts_monomials(self):
        self.assertEqual(molien_series(TRIVIAL, 'trivial', 4), [1, 2, 5, 8, 14])
        self.assertEqual([count_free_monomials(d) for d in range(5)], [1, 2, 5, 8, 14])

    def test_eps2_invariants(self):
        self.assertEqual(molien_series(EPS2, 'trivial', 4), [1, 0, 2, 0, 8])
        self.assertEqual(molien_series(EPS2, 'det_J', 2), [0, 0, 3])

    def test_eps4_invariants(self):
        self.assertEqual(molien_series(EPS4, 'trivial', 4), [1, 0, 5, 0, 14])

    def test_agrees_with_reynolds_ranks_through_weight_15(self):
        for action in (EPS2, EPS4):
            for character in ('trivial', 'det_J'):
                with self.subTest(action=action.name, character=character):
                    self.assertEqual(molien_series(action, character, 15), reynolds_dimensions(action, character, 15))

    def test_det_j_is_trivial_for_eps4(self):
        self.assertEqual(character_index(EPS4, 'det_J'), 0)
        self.assertEqual(molien_series(EPS4, 'det_J', 6), molien_series(EPS4, 'trivial', 6))

    def test_characters_partition_the_monomials(self):
        for total, free in character_sum_rule(EPS2, 10):
            self.assertEqual(total, free)

    def test_meromorphic_dimensions_add_twisted_part(self):
        trivial = molien_series(EPS2, 'trivial', 11)
        twisted = molien_series(EPS2, 'det_J', 2)
        dims = meromorphic_dimensions(EPS2, 11)
        self.assertEqual(dims[:9], trivial[:9])
        self.assertEqual(dims[11], trivial[11] + twisted[2])

    def test_character_resolution(self):
        self.assertEqual(character_index(EPS2, 'det_J'), 2)
        self.assertEqual(character_index(EPS4, 'det_J'), 0)
        self.assertEqual(character_index(EPS2, '5'), 1)
        with self.assertRaises(ValidationError):
            character_index(EPS2, 'sign')

    def test_negative_bound(self):
        with self.assertRaises(ValidationError):
            molien_series(EPS2, 'trivial', -1)

    def test_reynolds_needs_real_character(self):
        with self.assertRaises(ValidationError):
            reynolds_dimensions(EPS2, 1, 4)


class MinimalGeneratorTests(SimpleTestCase):
    def test_trivial_action(self):
        self.assertEqual(minimal_generator_degrees(TRIVIAL, 12), [1, 1, 2, 2, 9])

    def test_eps4(self):
        self.assertEqual(minimal_generator_degrees(EPS4, 12), [2, 2, 2, 2, 2, 9])

    def test_eps2(self):
        self.assertEqual(minimal_generator_degrees(EPS2, 15), [2, 2, 4, 4, 4, 4, 4, 11, 11, 11])

    def test_independent_of_enumeration_order(self):
        self.assertEqual(minimal_generator_degrees(EPS2, 11, reverse=True), minimal_generator_degrees(EPS2, 11))

    def test_refuses_weights_needing_the_relation(self):
        with self.assertRaises(ValidationError):
            minimal_generator_degrees(EPS2, 18)

    def test_named_generators_span_the_invariants(self):
        for d, (rank, dim) in generators_span_check(EPS2, INVARIANT_GENERATORS, 12).items():
            self.assertEqual(rank, dim, d)


class MonomialTests(SimpleTestCase):
    def test_enumeration(self):
        self.assertEqual(monomials_of_weight((1, 2), 3), [(3, 0), (1, 1)])
        self.assertEqual(monomials_of_weight((1, 1, 2, 2), -1), [])
        self.assertEqual(len(monomials_of_weight((1, 1, 2, 2), 6)), count_free_monomials(6))
