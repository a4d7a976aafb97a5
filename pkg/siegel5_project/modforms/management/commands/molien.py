from modforms.serializers import DimensionRowSerializer
from modforms.series import ACTIONS
from modforms.services.invariant_services import molien_series
from modforms.utils.output import render

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Graded dimensions of a character space of C[F1, F2, G1, G2] by Molien\'s formula'

    def add_arguments(self, parser):
        parser.add_argument('--character', default='trivial', help='trivial, det_J or an integer m')
        parser.add_argument('--group', choices=sorted(ACTIONS), default='eps2')
        parser.add_argument('--upto', type=int, default=15)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        dims = molien_series(ACTIONS[options['group']], options['character'], options['upto'])
        rows = [{'weight': d, 'dimension': n} for d, n in enumerate(dims)]
        records = DimensionRowSerializer(rows, many=True).data
        self.stdout.write(render(records, ('weight', 'dimension'), options['format']), ending='')
