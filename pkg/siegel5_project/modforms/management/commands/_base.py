"""Shared plumbing for the toolkit's management commands."""

import logging

from django.core.management.base import BaseCommand, CommandError

from modforms.exceptions import IdentityFailure, ToolkitError
from modforms.utils.output import FORMATS

logger = logging.getLogger('modforms')

#: Exit status for a failed verification; usage and data errors exit with 2.
EXIT_FAILURE = 1
EXIT_USAGE = 2


class ToolkitCommand(BaseCommand):
    """Adds --format and --data-dir and maps toolkit errors to exit statuses."""

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default='text', help='Output format')
        parser.add_argument('--data-dir', default=None, help='Directory holding the data tables')

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except IdentityFailure as e:
            logger.warning(f"{self.__class__.__module__}: {e} (witness {e.witness})")
            raise CommandError(f"{e} (witness {e.witness})", returncode=EXIT_FAILURE)
        except ToolkitError as e:
            logger.error(f"{self.__class__.__module__}: {e}")
            raise CommandError(f"{e.__class__.__name__}: {e}", returncode=EXIT_USAGE)
