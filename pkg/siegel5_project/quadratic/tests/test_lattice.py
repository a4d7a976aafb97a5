import random
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from modforms.exceptions import ValidationError
from quadratic.services.lattice_services import (
    L_BASIS, LAMBDA_0, LAMBDA_TAU_2Z, automorphy, bilinear, block_transpose, check_transform,
    coset_of, epsilon_u, gram_of_L, humbert_equation, humbert_value, in_gamma0, is_in_dual,
    is_symplectic, moebius, pf_conjugation_holds, pf_of_phi_symbolic, pfaffian, phi_embed,
    random_level_symplectic, random_point, random_transform_checks,
)
from quadratic.services.weil_services import discriminant_form, named_cosets
from quadratic.structures import SYMPLECTIC_FORM, AntisymMatrix, SiegelPoint


class AntisymMatrixTests(SimpleTestCase):
    def test_matrix_round_trip_and_pfaffian(self):
        x = AntisymMatrix(1, 2, 3, 4, 5, 6)
        self.assertEqual(AntisymMatrix.from_matrix(x.to_matrix()), x)
        self.assertEqual(x.pfaffian(), 1 * 6 - 2 * 5 + 3 * 4)

    def test_rejects_non_antisymmetric(self):
        with self.assertRaises(ValidationError):
            AntisymMatrix.from_matrix(np.eye(4, dtype=object))
        with self.assertRaises(ValidationError):
            AntisymMatrix.from_matrix(np.zeros((3, 3), dtype=object))

    def test_symplectic_form(self):
        self.assertEqual(pfaffian(SYMPLECTIC_FORM), -1)
        self.assertTrue(is_symplectic(np.eye(4, dtype=object)))

    def test_pfaffian_under_conjugation(self):
        rng = random.Random(50)
        for _ in range(30):
            a = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
            x = AntisymMatrix(*(rng.randint(-5, 5) for _ in range(6)))
            self.assertTrue(pf_conjugation_holds(a, x))


class LatticeTests(SimpleTestCase):
    def test_gram_matrix(self):
        gram = gram_of_L()
        self.assertEqual(gram.determinant, 50)
        self.assertEqual(gram.signature, (3, 2))
        self.assertTrue(all(v.in_lattice for v in L_BASIS))

    def test_bilinear_form_is_twice_the_norm(self):
        for v in L_BASIS:
            self.assertEqual(bilinear(v, v), 2 * pfaffian(v))

    def test_embedding_is_isotropic(self):
        self.assertEqual(pf_of_phi_symbolic(), 0)
        rng = random.Random(5)
        for _ in range(10):
            self.assertEqual(pfaffian(phi_embed(random_point(rng))), 0)

    def test_lambda_zero(self):
        self.assertEqual(pfaffian(LAMBDA_0), Fraction(1, 20))
        self.assertFalse(LAMBDA_0.in_lattice)
        self.assertTrue(is_in_dual(LAMBDA_0))
        self.assertEqual(discriminant_form().reduce(coset_of(LAMBDA_0)), named_cosets()['gamma1'])

    def test_lambda_zero_humbert_surface(self):
        self.assertEqual(humbert_equation(LAMBDA_0), (1, 0, 1, 0, Fraction(-1, 5)))
        for n in range(-4, 5):
            z = Fraction(n, 3)
            point = SiegelPoint(1, z, Fraction(1, 5) - z + z * z)
            self.assertEqual(point.det, Fraction(1, 5) - z)
            self.assertEqual(humbert_value(LAMBDA_0, point), 0)
        self.assertNotEqual(humbert_value(LAMBDA_0, SiegelPoint(1, 0, 1)), 0)

    def test_tau_equals_2z(self):
        self.assertEqual(pfaffian(LAMBDA_TAU_2Z), 1)
        self.assertEqual(coset_of(LAMBDA_TAU_2Z), (0, 0, 0))
        self.assertEqual(humbert_equation(LAMBDA_TAU_2Z), (0, -1, 2, 0, 0))
        self.assertEqual(humbert_value(LAMBDA_TAU_2Z, SiegelPoint(2, 1, 7)), 0)

    def test_vectors_outside_the_dual(self):
        with self.assertRaises(ValidationError):
            coset_of(AntisymMatrix(a=Fraction(1, 7)))
        with self.assertRaises(ValidationError):
            humbert_equation(AntisymMatrix(b=1))


class SymplecticActionTests(SimpleTestCase):
    def test_epsilon_matrices(self):
        self.assertEqual(epsilon_u(2), ((2, 0, 1, 0), (0, 1, 0, 0), (5, 0, 3, 0), (0, 0, 0, 1)))
        for u in range(1, 5):
            self.assertTrue(in_gamma0(epsilon_u(u)), u)
        with self.assertRaises(ValidationError):
            epsilon_u(5)

    def test_gamma0_membership(self):
        m = np.eye(4, dtype=object)
        m[2, 0] = 1
        self.assertTrue(is_symplectic(m))
        self.assertFalse(in_gamma0(m))

    def test_identity_action(self):
        point = SiegelPoint(2, 1, 3)
        identity = np.eye(4, dtype=object)
        self.assertEqual(moebius(identity, point), point)
        self.assertEqual(automorphy(identity, point), 1)

    def test_block_transpose_is_an_involution(self):
        m = np.array(epsilon_u(3), dtype=object)
        self.assertTrue((block_transpose(block_transpose(m)) == m).all())
        self.assertTrue(is_symplectic(block_transpose(m)))

    def test_transform_identity_for_eps2(self):
        result = check_transform(epsilon_u(2), SiegelPoint(2, 1, 3))
        self.assertTrue(result.holds)
        self.assertEqual(result.lhs, result.rhs)
        self.assertFalse(result.literal_holds)

    def test_transform_identity_for_translations(self):
        m = np.eye(4, dtype=object)
        m[0, 2], m[0, 3], m[1, 2], m[1, 3] = 1, 2, 2, -1
        result = check_transform(m, SiegelPoint(Fraction(1, 2), Fraction(1, 3), 4))
        self.assertTrue(result.holds)
        self.assertTrue(result.literal_holds)

    def test_transform_identity_for_random_matrices(self):
        results = random_transform_checks(20, seed=5)
        self.assertEqual(len(results), 20)
        self.assertTrue(all(r.holds for r in results))

    def test_random_matrices_lie_in_gamma0(self):
        rng = random.Random(7)
        for _ in range(10):
            self.assertTrue(in_gamma0(random_level_symplectic(rng)))

    def test_rejects_non_symplectic(self):
        m = np.eye(4, dtype=object) * 2
        with self.assertRaises(ValidationError):
            check_transform(m, SiegelPoint(2, 1, 3))

    def test_eps2_maps_gamma1_to_gamma2(self):
        image = LAMBDA_0.conjugated(epsilon_u(2))
        self.assertEqual(image, AntisymMatrix(2, Fraction(1, 2), -1, -1, Fraction(-1, 2), Fraction(-3, 5)))
        self.assertEqual(discriminant_form().reduce(coset_of(image)), named_cosets()['gamma2'])
