from provclose.core.closure import closure_cyclic
from provclose.core.finoracle.search import (
    FAIL,
    INCONCLUSIVE,
    necessary_condition_check,
    separation_sweep,
)
from provclose.core.management.base import ProvcloseCommand, render_closure
from provclose.core.serializers import (
    ClosureRequestSerializer,
    ClosureResultSerializer,
    NecessaryConditionReportSerializer,
    SeparationOutcomeSerializer,
    WitnessSerializer,
)


class Command(ProvcloseCommand):
    help = (
        'Compute the closure of <w> and check it against the finite-quotient oracle: no catalog '
        'group in V may separate the generator from <w>, and every excluded root power must be '
        'separated.'
    )
    request_serializer_class = ClosureRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_word_argument(parser)
        self.add_variety_argument(parser)
        self.add_catalog_argument(parser)

    def run(self, options):
        request = self.validate_request(options)
        w, variety = request['word'], request['variety']
        catalog = self.load_catalog(options)
        oracle_options = self.oracle_options(options)

        result = closure_cyclic(w, variety)
        report = necessary_condition_check(result.generator, w, variety, catalog, **oracle_options)
        outcomes = separation_sweep(w, variety, catalog, **oracle_options)

        if report.groups_skipped:
            self.stderr.write(
                self.style.WARNING(
                    f'Skipped groups over the homomorphism cap: {", ".join(report.groups_skipped)}'
                )
            )

        inconclusive = [outcome for outcome in outcomes if outcome.status == INCONCLUSIVE]
        for outcome in inconclusive:
            self.stderr.write(
                self.style.WARNING(
                    f'No catalog group in {variety} separates {outcome.candidate} from <{w}>'
                )
            )

        if report.status == FAIL:
            status = FAIL
        elif inconclusive:
            status = INCONCLUSIVE
        else:
            status = report.status

        oracle = {
            'status': status,
            'necessary': NecessaryConditionReportSerializer(report).data,
            'separation': SeparationOutcomeSerializer(outcomes, many=True).data,
        }
        if report.counterexample is not None:
            oracle['witness'] = WitnessSerializer(report.counterexample).data
        return ClosureResultSerializer(result, context={'oracle': oracle}).data

    def failure(self, payload):
        if payload['oracle']['status'] == FAIL:
            witness = payload['oracle']['witness']
            return (
                f'{witness["group"]} separates the closure generator {payload["generator"]} '
                f'from <{payload["input"]}>'
            )
        return None

    def render_text(self, payload):
        lines = [render_closure(payload)]
        necessary = payload['oracle']['necessary']
        lines.append(
            f'  necessary condition: {necessary["status"]} over '
            f'{len(necessary["groups_checked"])} groups, {necessary["homs_checked"]} homomorphisms'
        )
        if necessary['groups_skipped']:
            lines.append(f'  skipped over the cap: {", ".join(necessary["groups_skipped"])}')
        for outcome in payload['oracle']['separation']:
            witness = outcome['witness']
            found = f' by {witness["group"]}' if witness else ''
            lines.append(f'  {outcome["candidate"]}: {outcome["status"]}{found}')
        return '\n'.join(lines)
