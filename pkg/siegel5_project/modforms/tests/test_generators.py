import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from modforms.exceptions import DataIntegrityError, PrecisionError, SupportConeError, ValidationError
from modforms.selectors import (
    clear_caches, data_checksums, get_data_dir, get_generator_set, get_jacobian_polynomial,
    verify_checksums,
)
from modforms.services.generator_services import (
    FORM_NAMES, b_symmetry_violation, load_generators, parse_generator_table,
    relation_checks, restriction_check, swap_checks, validate_generators,
)


class GeneratorTableTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.gens = get_generator_set()

    def test_table_is_complete_at_truncation_seven(self):
        self.assertTrue(self.gens.is_complete)
        self.assertEqual(self.gens.trunc, 7)

    def test_expected_leading_coefficients(self):
        f1, f2, g1, g2 = self.gens.basic()
        self.assertEqual((f1[(0, 0, 0)], f1[(1, 0, 0)], f1[(0, 0, 1)]), (1, 3, 3))
        self.assertEqual((f2[(1, 0, 0)], f2[(0, 0, 1)]), (1, -1))
        self.assertEqual((g1[(1, 0, 0)], g2[(1, 0, 0)]), (1, -1))
        self.assertEqual(g2[(2, 0, 1)], 7)

    def test_weights(self):
        expected = {'f1': 1, 'f2': 1, 'g1': 2, 'g2': 2, 'h1': 2, 'h2': 2, 'e2': 2,
                    'phi1': 4, 'phi2': 4, 'phi3': 4, 'phi4': 4, 'J': 9}
        for name in FORM_NAMES:
            self.assertEqual(self.gens.form(name).weight, expected[name], name)

    def test_b_symmetry(self):
        for name in ('f1', 'f2', 'g1', 'g2'):
            self.assertIsNone(b_symmetry_violation(self.gens.form(name)), name)

    def test_swap_relations(self):
        for label, witness in swap_checks(self.gens).items():
            self.assertIsNone(witness, label)

    def test_restrictions_to_s_zero(self):
        self.assertEqual(restriction_check(self.gens), {'f1': None, 'f2': None})

    def test_defining_relations(self):
        for label, witness in relation_checks(self.gens).items():
            self.assertIsNone(witness, label)

    def test_validation_passes(self):
        self.assertEqual(validate_generators(self.gens), [])

    def test_maass_form_phi4_is_cuspidal(self):
        self.assertIsNone(self.gens.phi4.first_cusp_violation())
        self.assertEqual(self.gens.e2.cone_violations(), [])

    def test_unknown_form(self):
        with self.assertRaises(ValidationError):
            self.gens.form('f3')

    def test_truncated_set(self):
        smaller = self.gens.truncated(5)
        self.assertEqual(smaller.trunc, 5)
        self.assertEqual(smaller.J.trunc, 5)


class GeneratorLoadingTests(SimpleTestCase):
    def test_mirrors_missing_rows(self):
        gens = load_generators([(1, 1, 1, 2, 0, 0, 1)], trunc=3)
        self.assertEqual(gens.f1[(1, -1, 1)], 2)
        self.assertEqual(gens.g2[(1, -1, 1)], 1)

    def test_disagreeing_mirror_rows(self):
        with self.assertRaises(DataIntegrityError):
            load_generators([(1, 1, 1, 2, 0, 0, 1), (1, -1, 1, 3, 0, 0, 1)], trunc=3)

    def test_conflicting_duplicates(self):
        with self.assertRaises(DataIntegrityError):
            load_generators([(1, 0, 0, 1, 0, 0, 0), (1, 0, 0, 2, 0, 0, 0)], trunc=3)

    def test_row_beyond_truncation(self):
        with self.assertRaises(PrecisionError):
            load_generators([(2, 0, 2, 1, 0, 0, 0)], trunc=3)

    def test_row_outside_cone(self):
        with self.assertRaises(SupportConeError):
            load_generators([(1, 3, 1, 1, 0, 0, 0)], trunc=3)

    def test_malformed_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'generators.tsv'
            path.write_text('# header\n0\t0\t0\t1\t0\t0\n')
            with self.assertRaises(DataIntegrityError):
                parse_generator_table(path)
            path.write_text('0\t0\t0\t1\tx\t0\t0\n')
            with self.assertRaises(DataIntegrityError):
                parse_generator_table(path)

    def test_missing_table(self):
        with self.assertRaises(DataIntegrityError):
            parse_generator_table(Path('/nonexistent/generators.tsv'))


class DataSelectorTests(SimpleTestCase):
    def tearDown(self):
        clear_caches()

    def test_missing_data_dir(self):
        with self.assertRaises(DataIntegrityError):
            get_data_dir('/nonexistent/siegel5-data')

    def test_embedded_checksums_match_manifest(self):
        self.assertEqual(set(verify_checksums().values()), {True})
        digests = data_checksums()
        self.assertEqual(sorted(digests), ['generators.tsv', 'jacobian_square.tsv'])
        self.assertTrue(all(len(d) == 64 for d in digests.values()))

    def copy_data(self, tmp, names=('generators.tsv', 'jacobian_square.tsv', 'SHA256SUMS')):
        source = get_data_dir()
        for name in names:
            (Path(tmp) / name).write_bytes((source / name).read_bytes())

    def test_data_dir_override(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.copy_data(tmp)
            gens = get_generator_set(tmp)
            self.assertEqual(gens.f1, get_generator_set().f1)
            self.assertEqual(get_jacobian_polynomial(tmp), get_jacobian_polynomial())

    def test_missing_manifest(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.copy_data(tmp, ('generators.tsv', 'jacobian_square.tsv'))
            with self.assertRaises(DataIntegrityError):
                verify_checksums(tmp)
            with self.assertRaises(DataIntegrityError):
                get_generator_set(tmp)

    def test_tampered_tables_are_rejected_on_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.copy_data(tmp)
            table = Path(tmp) / 'generators.tsv'
            table.write_text(table.read_text().replace('1\t0\t0\t3\t1\t1\t-1', '1\t0\t0\t4\t1\t1\t-1'))
            relation = Path(tmp) / 'jacobian_square.tsv'
            relation.write_text(relation.read_text() + '\n')
            with self.assertRaises(DataIntegrityError):
                get_generator_set(tmp)
            with self.assertRaises(DataIntegrityError):
                get_jacobian_polynomial(tmp)
            self.assertEqual(verify_checksums(tmp), {'generators.tsv': False, 'jacobian_square.tsv': False})
            self.assertEqual(get_generator_set(tmp, verify=False).f1[(1, 0, 0)], 4)
