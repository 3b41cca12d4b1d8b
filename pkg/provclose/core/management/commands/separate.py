from provclose.core.finoracle.search import INCONCLUSIVE, SEPARATED, find_separating_quotient
from provclose.core.freeword import signed_exponent_over
from provclose.core.management.base import ProvcloseCommand
from provclose.core.serializers import (
    MemberRequestSerializer,
    VarietyField,
    WitnessSerializer,
    WordField,
)

IN_SUBGROUP = 'in-subgroup'


class Command(ProvcloseCommand):
    help = 'Search the catalog for a finite group in V separating v from <w>.'
    request_serializer_class = MemberRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_candidate_argument(parser)
        self.add_word_argument(parser)
        self.add_variety_argument(parser)
        self.add_catalog_argument(parser)

    def run(self, options):
        request = self.validate_request(options)
        v, w, variety = request['candidate'], request['word'], request['variety']
        payload = {
            'candidate': WordField().to_representation(v),
            'input': WordField().to_representation(w),
            'variety': VarietyField().to_representation(variety),
        }

        # No finite quotient separates an element of <w> itself
        if signed_exponent_over(v, w) is not None:
            payload['oracle'] = {'status': IN_SUBGROUP}
            return payload

        witness = find_separating_quotient(
            v, w, variety, self.load_catalog(options), **self.oracle_options(options)
        )
        if witness is None:
            self.stderr.write(
                self.style.WARNING(
                    f'No catalog group in {variety} separates {v} from <{w}>; this is not a proof '
                    'of membership.'
                )
            )
            payload['oracle'] = {'status': INCONCLUSIVE}
        else:
            payload['oracle'] = {
                'status': SEPARATED,
                'witness': WitnessSerializer(witness).data,
            }
        return payload

    def render_text(self, payload):
        oracle = payload['oracle']
        if oracle['status'] != SEPARATED:
            return f'{payload["candidate"]} from <{payload["input"]}>: {oracle["status"]}'
        witness = oracle['witness']
        images = ', '.join(f'{letter} -> {image}' for letter, image in witness['images'].items())
        return (
            f'{payload["candidate"]} is separated from <{payload["input"]}> by '
            f'{witness["group"]} ({images})'
        )
