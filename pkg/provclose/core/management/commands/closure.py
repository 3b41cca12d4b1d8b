from provclose.core.closure import closure_cyclic
from provclose.core.management.base import ProvcloseCommand, render_closure
from provclose.core.serializers import ClosureRequestSerializer, ClosureResultSerializer


class Command(ProvcloseCommand):
    help = 'Compute the closure of <w> in the pro-V topology, with its derivation.'
    request_serializer_class = ClosureRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_word_argument(parser)
        self.add_variety_argument(parser)

    def run(self, options):
        request = self.validate_request(options)
        result = closure_cyclic(request['word'], request['variety'])
        return ClosureResultSerializer(result).data

    def render_text(self, payload):
        return render_closure(payload)
