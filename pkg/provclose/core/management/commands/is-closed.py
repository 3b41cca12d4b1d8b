from provclose.core.closure import is_closed_cyclic
from provclose.core.management.base import ProvcloseCommand
from provclose.core.serializers import ClosureRequestSerializer, VerdictSerializer


class Command(ProvcloseCommand):
    help = 'Decide whether <w> is closed in the pro-V topology.'
    request_serializer_class = ClosureRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_word_argument(parser)
        self.add_variety_argument(parser)

    def run(self, options):
        request = self.validate_request(options)
        verdict = is_closed_cyclic(request['word'], request['variety'])
        return VerdictSerializer(
            {'input': request['word'], 'variety': request['variety'], **verdict._asdict()}
        ).data

    def render_text(self, payload):
        closed = 'closed' if payload['closed'] else 'not closed'
        cites = f' ({payload["cites"]})' if payload['cites'] else ''
        return (
            f'<{payload["input"]}> is {closed} in {payload["variety"]}: {payload["reason"]}{cites}'
        )
