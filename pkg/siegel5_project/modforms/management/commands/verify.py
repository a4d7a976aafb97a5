from django.core.management.base import CommandError

from modforms.serializers import CheckResultSerializer, VerificationReportSerializer
from modforms.services.verification_services import SUITE_NAMES, run_suite
from modforms.utils.output import render_jsonl

from ._base import EXIT_FAILURE, ToolkitCommand

SUITE_CHOICES = ('all',) + SUITE_NAMES


class Command(ToolkitCommand):
    help = 'Run a verification suite and report every check'

    def add_arguments(self, parser):
        parser.add_argument('suite', nargs='?', choices=SUITE_CHOICES, default=None)
        parser.add_argument('--suite', dest='suite_option', choices=SUITE_CHOICES, default=None)
        parser.add_argument('--parallel', action='store_true', help='Run the suites of "all" concurrently')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        suite = options['suite'] or options['suite_option'] or 'all'
        report = run_suite(suite, options['data_dir'], parallel=options['parallel'] or None)
        data = VerificationReportSerializer(report).data

        if options['format'] == 'jsonl':
            summary = {key: data[key] for key in ('suite', 'version', 'checksums', 'passed')}
            self.stdout.write(render_jsonl(list(data['checks']) + [summary]), ending='')
        else:
            self.stdout.write(f"suite {data['suite']}  version {data['version']}")
            for name, digest in data['checksums'].items():
                self.stdout.write(f"  {name}  {digest}")
            for result in CheckResultSerializer(report.checks, many=True).data:
                line = f"{result['status'].upper():4}  {result['id']}"
                if result['status'] == 'fail':
                    line += f"  witness={result['witness']}"
                if result['detail']:
                    line += f"  ({result['detail']})"
                self.stdout.write(line)
            self.stdout.write(f"{len(report.checks)} checks, {len(report.failures)} failed")

        if not report.passed:
            raise CommandError(f"{len(report.failures)} checks failed", returncode=EXIT_FAILURE)
