from provclose.core.freeword import cyclic_decompose, root_exp
from provclose.core.management.base import ProvcloseCommand
from provclose.core.serializers import RootExpSerializer, WordRequestSerializer


class Command(ProvcloseCommand):
    help = 'Print the primitive root and exponent of a word.'
    request_serializer_class = WordRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_word_argument(parser)

    def run(self, options):
        w = self.validate_request(options)['word']
        u, e = root_exp(w)
        conjugator, core = cyclic_decompose(w)
        return RootExpSerializer(
            {'input': w, 'root': u, 'exponent': e, 'conjugator': conjugator, 'core': core}
        ).data

    def render_text(self, payload):
        return f'{payload["input"]} = ({payload["root"]})^{payload["exponent"]}'
