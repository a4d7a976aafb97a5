from fractions import Fraction

from django.test import SimpleTestCase

from modforms.exceptions import UnsupportedWeightError, ValidationError
from quadratic.services.dimension_services import (
    dimension_table, symmetry_group, vvmf_dimension, z_eigenvalue,
)
from quadratic.services.weil_services import A1_GRAM, discriminant_form


class VectorValuedDimensionTests(SimpleTestCase):
    def test_level_five_dimensions(self):
        expected = {Fraction(5, 2): 4, Fraction(7, 2): 7, Fraction(11, 2): 11, Fraction(15, 2): 15, Fraction(31, 2): 33}
        for k, dim in expected.items():
            self.assertEqual(vvmf_dimension(k), dim, k)

    def test_cusp_forms(self):
        self.assertEqual(vvmf_dimension('7/2', cuspidal=True), 2)

    def test_eps2_fixed_subspace(self):
        self.assertEqual(vvmf_dimension(Fraction(7, 2), automorphisms=(2,)), 4)
        self.assertLessEqual(
            vvmf_dimension(Fraction(11, 2), automorphisms=(2,)), vvmf_dimension(Fraction(11, 2)),
        )

    def test_a1(self):
        a1 = discriminant_form(A1_GRAM)
        self.assertEqual([vvmf_dimension(Fraction(k, 2), form=a1) for k in (7, 11, 19)], [1, 1, 2])

    def test_wrong_parity_and_low_weight(self):
        with self.assertRaises(UnsupportedWeightError):
            vvmf_dimension(3)
        with self.assertRaises(UnsupportedWeightError):
            vvmf_dimension(Fraction(3, 2))

    def test_unreadable_weight(self):
        with self.assertRaises(ValidationError):
            vvmf_dimension('seven halves')

    def test_automorphisms_need_level_five_form(self):
        with self.assertRaises(ValidationError):
            vvmf_dimension(Fraction(7, 2), automorphisms=(2,), form=discriminant_form(A1_GRAM))

    def test_table(self):
        self.assertEqual(dimension_table(['7/2', '11/2']), [(Fraction(7, 2), 7), (Fraction(11, 2), 11)])


class SymmetryGroupTests(SimpleTestCase):
    def test_z_eigenvalue(self):
        self.assertEqual(z_eigenvalue(Fraction(7, 2), 1), 1)
        self.assertEqual(z_eigenvalue(Fraction(9, 2), 1), -1)
        with self.assertRaises(UnsupportedWeightError):
            z_eigenvalue(Fraction(4), 1)

    def test_closure(self):
        swap = ((1, 0, 2), 1)
        cycle = ((1, 2, 0), 1)
        self.assertEqual(len(symmetry_group([swap, cycle])), 6)

    def test_conflicting_signs(self):
        self.assertIsNone(symmetry_group([((0, 1), -1)]))
        self.assertEqual(symmetry_group([((1, 0), -1)]), {(0, 1): 1, (1, 0): -1})
