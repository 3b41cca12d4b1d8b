import sys

from django.core.management.base import CommandError

from provclose.core.closure import closure_cyclic
from provclose.core.exceptions import ProvcloseError
from provclose.core.management.base import ProvcloseCommand, format_errors, render_closure
from provclose.core.serializers import (
    ClosureResultSerializer,
    VarietyRequestSerializer,
    WordRequestSerializer,
)


class Command(ProvcloseCommand):
    help = 'Compute closures for a file of words, one per line, writing one record per word.'
    request_serializer_class = VarietyRequestSerializer
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_variety_argument(parser)
        parser.add_argument(
            '--file', default='-', help='file of words, one per line, or - for stdin (default)'
        )

    def run(self, options):
        variety = self.validate_request(options)['variety']
        self.failed_lines = []

        if options['file'] == '-':
            self.process(options.get('stdin', sys.stdin), variety, options)
            return None

        try:
            lines = open(options['file'], encoding='utf-8')
        except OSError as e:
            raise CommandError(f'{options["file"]}: {e.strerror}', returncode=2) from e
        with lines:
            self.process(lines, variety, options)
        return None

    def process(self, lines, variety, options):
        for number, line in enumerate(lines, start=1):
            text = line.strip()
            if not text or text.startswith('#'):
                continue

            record = {'line': number, **self.evaluate(text, variety, options['rank'])}
            if 'error' in record:
                self.failed_lines.append(number)
            self.emit(record, options['format'])

    @staticmethod
    def evaluate(text, variety, rank):
        serializer = WordRequestSerializer(data={'word': text}, context={'rank': rank})
        if not serializer.is_valid():
            return {'input': text, 'error': format_errors(serializer.errors)}
        try:
            result = closure_cyclic(serializer.validated_data['word'], variety)
        except ProvcloseError as e:
            return {'input': text, 'error': e.message}
        return ClosureResultSerializer(result).data

    def failure(self, payload):
        if self.failed_lines:
            lines = ', '.join(map(str, self.failed_lines))
            return f'{len(self.failed_lines)} lines failed: {lines}'
        return None

    def render_text(self, payload):
        if 'error' in payload:
            return f'line {payload["line"]}: {payload["input"]}: {payload["error"]}'
        return f'line {payload["line"]}: {render_closure(payload)}'
