import json
import logging
from typing import Any, Dict, List, Optional, Type

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from provclose.core.exceptions import SYNTAX_ERRORS, ProvcloseError
from provclose.core.finoracle.catalog import Catalog, default_catalog, read_catalog_file
from provclose.core.serializers import CatalogEntrySerializer

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('json', 'text')


def format_errors(errors) -> str:
    if isinstance(errors, list):
        return '; '.join(
            f'entry {i}: {format_errors(entry)}' for i, entry in enumerate(errors) if entry
        )
    return '; '.join(
        f'{field}: {" ".join(map(str, messages))}' for field, messages in errors.items()
    )


def render_closure(payload: Dict[str, Any]) -> str:
    lines = [f'<{payload["input"]}> in {payload["variety"]}']
    for step in payload['trace']:
        values = ', '.join(f'{key} = {value}' for key, value in step['values'].items())
        label = step['rule'] + (f', {step["cites"]}' if step['cites'] else '')
        lines.append(f'  [{label}] {step["statement"]}' + (f' ({values})' if values else ''))

    closed = 'closed' if payload['closed'] else f'not closed, index {payload["index"]}'
    lines.append(
        f'closure: <{payload["generator"]}> with m = {payload["closure_exponent"]} ({closed})'
    )
    if payload['oracle'].get('status') != 'skipped':
        lines.append(f'oracle: {payload["oracle"]["status"]}')
    return '\n'.join(lines)


class ProvcloseCommand(BaseCommand):
    """
    Base class of the provclose subcommands.

    Subclasses add their options and implement ``run``, which returns the JSON document to print.
    Malformed input exits with status 2 and mathematical errors with status 1.
    """

    request_serializer_class: Optional[Type[serializers.Serializer]] = None
    requires_system_checks: List[str] = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        # -v names the candidate word; verbosity stays available as --verbosity
        kwargs.setdefault('conflict_handler', 'resolve')
        return super().create_parser(prog_name, subcommand, **kwargs)

    def add_arguments(self, parser):
        parser.add_argument(
            '--format', choices=OUTPUT_FORMATS, default='json', help='output format (json)'
        )
        parser.add_argument('--rank', type=int, help='ambient rank of the free group')

    @staticmethod
    def add_word_argument(parser):
        parser.add_argument('-w', '--word', help='a word, such as "(ab)^6" or "[a,b]^2"')

    @staticmethod
    def add_variety_argument(parser):
        parser.add_argument('-V', '--variety', help='a pseudovariety, such as "GP:2" or "Vp:3"')

    @staticmethod
    def add_candidate_argument(parser):
        parser.add_argument('-v', '--candidate', help='the element tested against <w>')

    @staticmethod
    def add_catalog_argument(parser):
        parser.add_argument(
            '--catalog', help='JSON catalog of finite groups (default: PROVCLOSE_CATALOG)'
        )

    def handle(self, *args, **options):
        if options['verbosity'] > 1:
            logging.getLogger('provclose').setLevel(logging.DEBUG)
        if options['rank'] is not None and options['rank'] < 1:
            raise CommandError('rank: must be at least 1', returncode=2)

        try:
            payload = self.run(options)
        except SYNTAX_ERRORS as e:
            raise CommandError(e.message, returncode=2) from e
        except ProvcloseError as e:
            raise CommandError(e.message, returncode=1) from e

        if payload is not None:
            self.emit(payload, options['format'])
        failure = self.failure(payload)
        if failure:
            raise CommandError(failure, returncode=1)

    def run(self, options) -> Optional[Dict[str, Any]]:
        raise NotImplementedError('subclasses of ProvcloseCommand must provide a run() method')

    def failure(self, payload) -> Optional[str]:
        """Return a message when the emitted result should exit with status 1."""
        return None

    def emit(self, payload: Dict[str, Any], output_format: str) -> None:
        if output_format == 'json':
            self.stdout.write(json.dumps(payload, ensure_ascii=False))
        else:
            self.stdout.write(self.render_text(payload))

    def render_text(self, payload: Dict[str, Any]) -> str:
        return '\n'.join(
            f'{key}: {value if isinstance(value, (str, int)) else json.dumps(value)}'
            for key, value in payload.items()
        )

    def validate_request(self, options, serializer_class=None) -> Dict[str, Any]:
        serializer_class = serializer_class or self.request_serializer_class
        data = {
            name: options[name]
            for name in serializer_class().fields
            if options.get(name) is not None
        }
        serializer = serializer_class(data=data, context={'rank': options['rank']})
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=2)
        return serializer.validated_data

    def load_catalog(self, options) -> Catalog:
        path = options.get('catalog') or settings.PROVCLOSE_CATALOG
        if not path:
            return default_catalog(settings.PROVCLOSE_ELEMENT_CAP)

        serializer = CatalogEntrySerializer(data=read_catalog_file(path), many=True)
        if not serializer.is_valid():
            raise CommandError(f'{path}: {format_errors(serializer.errors)}', returncode=2)

        logger.debug(f'Loading catalog {path}')
        return Catalog.from_entries(serializer.validated_data, settings.PROVCLOSE_ELEMENT_CAP)

    @staticmethod
    def oracle_options(options) -> Dict[str, Any]:
        return {
            'rank': options['rank'],
            'cap': settings.PROVCLOSE_HOM_CAP,
            'workers': settings.PROVCLOSE_SEARCH_WORKERS,
        }
