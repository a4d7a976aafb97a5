from modforms.serializers import DimensionRowSerializer
from modforms.services.hilbert_services import siegel_dims
from modforms.utils.output import render

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Tabulate dim M_k of the level-5 Siegel forms, or of vector-valued forms with --weight'

    def add_arguments(self, parser):
        parser.add_argument('--upto', type=int, default=19, help='Largest Siegel weight')
        parser.add_argument('--weight', default=None, help='Half-integral weight such as 7/2 for the Weil representation')
        parser.add_argument('--group', choices=('none', 'eps2'), default='none', help='Restrict to eps-fixed vectors')
        parser.add_argument('--cusp', action='store_true', help='Cusp forms only (with --weight)')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        if options['weight'] is not None:
            from quadratic.services.dimension_services import vvmf_dimension

            automorphisms = (2,) if options['group'] == 'eps2' else ()
            rows = [{
                'weight': options['weight'],
                'dimension': vvmf_dimension(options['weight'], options['cusp'], automorphisms),
            }]
        else:
            dims = siegel_dims(options['upto'])
            rows = [{'weight': k, 'dimension': d} for k, d in enumerate(dims) if k >= 1]
        records = DimensionRowSerializer(rows, many=True).data
        self.stdout.write(render(records, ('weight', 'dimension'), options['format']), ending='')
