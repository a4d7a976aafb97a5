import json
import shutil
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from modforms.selectors import clear_caches, get_data_dir


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line]


class ExpandCommandTests(SimpleTestCase):
    def test_text_table(self):
        output = run('expand', 'f1', '--prec', '1')
        self.assertEqual(output.splitlines(), [
            'a  b  c  value',
            '0  0  0      1',
            '1  0  0      3',
            '0  0  1      3',
        ])

    def test_jsonl(self):
        records = jsonl(run('expand', 'J', '--prec', '4', '--format', 'jsonl'))
        values = {(r['a'], r['b'], r['c']): r['value'] for r in records}
        self.assertEqual(values[(2, -1, 2)], '1')
        self.assertEqual(values[(2, 1, 2)], '-1')
        self.assertTrue(all(r['form'] == 'J' and r['a'] + r['c'] == 4 for r in records))

    def test_precision_beyond_table(self):
        with self.assertRaises(CommandError) as ctx:
            run('expand', 'f1', '--prec', '8')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unknown_form(self):
        with self.assertRaises(CommandError) as ctx:
            run('expand', 'f9')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_missing_data_dir(self):
        with self.assertRaises(CommandError) as ctx:
            run('expand', 'f1', '--data-dir', '/nonexistent/siegel5-data')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):
    def tearDown(self):
        clear_caches()

    def test_hilbert_suite_passes(self):
        output = run('verify', 'hilbert')
        self.assertIn('PASS  dimensions k = 1..19', output)
        self.assertIn('0 failed', output)

    def test_suite_option_and_jsonl_summary(self):
        records = jsonl(run('verify', '--suite', 'relations', '--format', 'jsonl'))
        summary = records[-1]
        self.assertEqual(summary['suite'], 'relations')
        self.assertTrue(summary['passed'])
        self.assertEqual(set(summary['checksums']), {'generators.tsv', 'jacobian_square.tsv'})
        self.assertTrue(all(r['status'] == 'pass' for r in records[:-1]))

    def test_rank_suite_certifies_weight_ten(self):
        records = jsonl(run('verify', 'rank', '--format', 'jsonl'))
        statuses = {r['id']: r['status'] for r in records[:-1]}
        self.assertEqual(statuses['rank weight 10'], 'pass')
        self.assertEqual(statuses['rank weight 8'], 'pass')

    def test_corrupted_table_fails_with_witness(self):
        source = get_data_dir()
        with tempfile.TemporaryDirectory() as tmp:
            for name in ('generators.tsv', 'jacobian_square.tsv', 'SHA256SUMS'):
                shutil.copy(source / name, Path(tmp) / name)
            table = Path(tmp) / 'generators.tsv'
            table.write_text(table.read_text().replace('1\t0\t0\t3\t1\t1\t-1', '1\t0\t0\t4\t1\t1\t-1'))
            out = StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', 'data', '--data-dir', tmp, '--format', 'jsonl', stdout=out)
            self.assertEqual(ctx.exception.returncode, 1)
            failures = [r for r in jsonl(out.getvalue())[:-1] if r['status'] == 'fail']
            self.assertIn('checksum generators.tsv', [r['id'] for r in failures])
            self.assertTrue(all(r['witness'] is not None for r in failures))

    def test_corrupted_table_is_refused_by_other_suites(self):
        source = get_data_dir()
        with tempfile.TemporaryDirectory() as tmp:
            for name in ('generators.tsv', 'jacobian_square.tsv', 'SHA256SUMS'):
                shutil.copy(source / name, Path(tmp) / name)
            table = Path(tmp) / 'generators.tsv'
            table.write_text(table.read_text().replace('1\t0\t0\t3\t1\t1\t-1', '1\t0\t0\t4\t1\t1\t-1'))
            for args in (('verify', 'relations'), ('expand', 'f1'), ('rank', '--weight', '4')):
                with self.subTest(args=args), self.assertRaises(CommandError) as ctx:
                    run(*args, '--data-dir', tmp)
                self.assertEqual(ctx.exception.returncode, 2)

    def test_unknown_suite(self):
        with self.assertRaises(CommandError):
            run('verify', 'everything')


class DimsCommandTests(SimpleTestCase):
    def test_siegel_dimensions(self):
        records = jsonl(run('dims', '--upto', '6', '--format', 'jsonl'))
        self.assertEqual([r['dimension'] for r in records], [0, 1, 0, 6, 0, 10])
        self.assertEqual(records[0]['weight'], '1')

    def test_vector_valued_dimensions(self):
        self.assertEqual(jsonl(run('dims', '--weight', '7/2', '--format', 'jsonl'))[0]['dimension'], 7)
        self.assertEqual(jsonl(run('dims', '--weight', '7/2', '--cusp', '--format', 'jsonl'))[0]['dimension'], 2)
        fixed = jsonl(run('dims', '--weight', '7/2', '--group', 'eps2', '--format', 'jsonl'))[0]
        self.assertEqual(fixed, {'weight': '7/2', 'dimension': 4})

    def test_unsupported_weight(self):
        with self.assertRaises(CommandError) as ctx:
            run('dims', '--weight', '3/2')
        self.assertEqual(ctx.exception.returncode, 2)


class MolienCommandTests(SimpleTestCase):
    def test_eps2_invariants(self):
        records = jsonl(run('molien', '--group', 'eps2', '--upto', '4', '--format', 'jsonl'))
        self.assertEqual([r['dimension'] for r in records], [1, 0, 2, 0, 8])

    def test_twisted_character(self):
        records = jsonl(run('molien', '--character', 'det_J', '--upto', '2', '--format', 'jsonl'))
        self.assertEqual([r['dimension'] for r in records], [0, 0, 3])

    def test_unknown_character(self):
        with self.assertRaises(CommandError) as ctx:
            run('molien', '--character', 'sign')
        self.assertEqual(ctx.exception.returncode, 2)


class RankCommandTests(SimpleTestCase):
    def test_matching_weight(self):
        record = jsonl(run('rank', '--weight', '4', '--format', 'jsonl'))[0]
        self.assertEqual((record['rank'], record['target'], record['status']), (6, 6, 'pass'))

    def test_weight_ten_passes_in_polynomial_coordinates(self):
        output = run('rank', '--weight', '10')
        self.assertIn('polynomial_match', output)
        self.assertIn('33', output)

    def test_wrong_target_is_a_verification_failure(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('rank', '--weight', '2', '--target', '2', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('identity_failure', out.getvalue())
