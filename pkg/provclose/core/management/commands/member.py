from provclose.core.closure import closure_cyclic, membership_in_closure
from provclose.core.management.base import ProvcloseCommand
from provclose.core.serializers import MemberRequestSerializer, MembershipSerializer


class Command(ProvcloseCommand):
    help = 'Decide whether v lies in the closure of <w>.'
    request_serializer_class = MemberRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_candidate_argument(parser)
        self.add_word_argument(parser)
        self.add_variety_argument(parser)

    def run(self, options):
        request = self.validate_request(options)
        v, w, variety = request['candidate'], request['word'], request['variety']
        result = closure_cyclic(w, variety)
        return MembershipSerializer(
            {
                'candidate': v,
                'input': w,
                'variety': variety,
                'member': membership_in_closure(v, w, variety),
                'closure_exponent': result.closure_exponent,
                'generator': result.generator,
            }
        ).data

    def render_text(self, payload):
        relation = 'lies' if payload['member'] else 'does not lie'
        return (
            f'{payload["candidate"]} {relation} in the {payload["variety"]} closure '
            f'<{payload["generator"]}> of <{payload["input"]}>'
        )
