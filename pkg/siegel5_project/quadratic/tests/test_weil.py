from fractions import Fraction

from django.test import SimpleTestCase

from modforms.exceptions import ValidationError
from quadratic.services.weil_services import (
    A1_GRAM, discriminant_form, eps_action, eps_composition_trivial, eps_permutation, gauss_sum,
    intertwiner_check, is_unitary, milgram_signature, named_cosets, polarization_holds,
    s_constant, s_squared_action, verify_mp2_relations, weil_field, weil_S, weil_T,
)


class A1WeilRepresentationTests(SimpleTestCase):
    def setUp(self):
        self.form = discriminant_form(A1_GRAM)
        self.field = weil_field(self.form)
        self.i = self.field.root_of_unity(Fraction(1, 4))

    def test_gauss_sum_and_signature(self):
        self.assertEqual(self.field.conductor, 8)
        self.assertEqual(gauss_sum(self.form), 1 + self.i)
        self.assertEqual(milgram_signature(self.form), 1)

    def test_s_matrix(self):
        c = (1 + self.i) / 2
        self.assertEqual(s_constant(self.form), c)
        s = weil_S(self.form)
        self.assertEqual(s.entry(0, 0), c)
        self.assertEqual(s.entry(1, 1), -c)

    def test_t_matrix(self):
        t = weil_T(self.form)
        self.assertEqual(t.entry(0, 0), 1)
        self.assertEqual(t.entry(1, 1), -self.i)

    def test_relations(self):
        self.assertTrue(verify_mp2_relations(self.form).passed)
        self.assertTrue(s_squared_action(self.form))


class LevelFiveWeilRepresentationTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.form = discriminant_form()
        cls.verdicts = verify_mp2_relations()

    def test_field(self):
        self.assertEqual(weil_field(self.form).conductor, 40)

    def test_milgram_signature_matches_lattice(self):
        self.assertEqual(milgram_signature(), self.form.signature() % 8)
        self.assertEqual(milgram_signature(), 1)

    def test_metaplectic_relations(self):
        self.assertTrue(self.verdicts.s_squared_is_st_cubed)
        self.assertTrue(self.verdicts.s_eighth_is_identity)
        self.assertIsNone(self.verdicts.witness)
        self.assertTrue(self.verdicts.passed)

    def test_unitary(self):
        self.assertTrue(is_unitary(weil_S()))
        self.assertTrue(is_unitary(weil_T()))

    def test_s_squared_is_negation(self):
        self.assertTrue(s_squared_action())

    def test_polarization(self):
        self.assertTrue(polarization_holds())


class EpsilonActionTests(SimpleTestCase):
    def setUp(self):
        self.form = discriminant_form()
        self.names = named_cosets()

    def test_eps2_on_named_cosets(self):
        self.assertEqual(eps_action(2, self.names['gamma1']), self.names['gamma2'])
        self.assertEqual(eps_action(2, self.names['delta1']), self.names['delta2'])
        self.assertEqual(eps_action(2, self.names['alpha1']), self.names['alpha2'])
        self.assertEqual(eps_action(2, self.names['beta1']), self.names['beta3'])

    def test_eps4_is_negation(self):
        for gamma in self.form:
            self.assertEqual(eps_action(4, gamma), self.form.neg(gamma))
        self.assertEqual(eps_permutation(4), self.form.negation_permutation())

    def test_composition(self):
        for u in range(1, 5):
            for v in range(1, 5):
                self.assertTrue(eps_composition_trivial(u, v), (u, v))

    def test_non_unit(self):
        with self.assertRaises(ValidationError):
            eps_action(5, self.names['gamma1'])

    def test_intertwines_weil_representation(self):
        for u in (2, 3):
            check = intertwiner_check(u)
            self.assertTrue(check.commutes_with_T, u)
            self.assertTrue(check.commutes_with_S, u)
