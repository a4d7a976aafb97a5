from modforms.exceptions import PrecisionError
from modforms.selectors import get_generator_set
from modforms.serializers import CoefficientRowSerializer
from modforms.services.generator_services import FORM_NAMES
from modforms.utils.output import render

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Print the Fourier coefficients of a form with a + c <= prec'

    def add_arguments(self, parser):
        parser.add_argument('form', help=f"One of {', '.join(FORM_NAMES)}")
        parser.add_argument('--prec', type=int, default=None, help='Largest a + c to print (default: the table truncation)')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        gens = get_generator_set(options['data_dir'])
        series = gens.form(options['form'])
        prec = gens.trunc if options['prec'] is None else options['prec']
        if prec < 0 or prec > gens.trunc:
            raise PrecisionError(f"Precision {prec} outside 0..{gens.trunc}")
        rows = [
            {'form': options['form'], 'a': a, 'b': b, 'c': c, 'value': value}
            for a, b, c, value in series.rows(prec)
        ]
        records = CoefficientRowSerializer(rows, many=True).data
        self.stdout.write(render(records, ('a', 'b', 'c', 'value'), options['format']), ending='')
