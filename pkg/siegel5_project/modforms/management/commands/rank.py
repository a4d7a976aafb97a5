from modforms.selectors import get_generator_set
from modforms.serializers import RankRowSerializer
from modforms.services.rank_services import rank_check
from modforms.utils.output import render

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Rank of the generator monomials of a weight on the truncated expansions'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, required=True)
        parser.add_argument('--target', type=int, default=None, help='Expected rank (default: the Hilbert series dimension)')
        super().add_arguments(parser)

    def handle(self, *args, **options):
        gens = get_generator_set(options['data_dir'])
        outcome = rank_check(gens, options['weight'], target=options['target'])
        records = [RankRowSerializer(outcome).data]
        headers = ('weight', 'monomials', 'rank', 'target', 'classification')
        self.stdout.write(render(records, headers, options['format']), ending='')
        outcome.raise_for_failure()
