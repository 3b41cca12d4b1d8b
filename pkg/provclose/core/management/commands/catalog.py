from provclose.core.exceptions import UnsupportedCheckError
from provclose.core.finoracle.structure import structure_flags
from provclose.core.management.base import ProvcloseCommand
from provclose.core.serializers import GroupSummarySerializer, VarietyRequestSerializer
from provclose.core.variety import finite_group_membership


class Command(ProvcloseCommand):
    help = 'List the groups of the oracle catalog, with their structure and membership in V.'
    request_serializer_class = VarietyRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_variety_argument(parser)
        self.add_catalog_argument(parser)

    def run(self, options):
        variety = None
        if options.get('variety') is not None:
            variety = self.validate_request(options)['variety']

        summaries = []
        for group in self.load_catalog(options):
            summary = {'group': group, 'flags': structure_flags(group)}
            if variety is not None:
                try:
                    summary['member'] = finite_group_membership(group, variety)
                except UnsupportedCheckError:
                    summary['member'] = 'unsupported'
            summaries.append(summary)

        return {
            'variety': None if variety is None else str(variety),
            'groups': GroupSummarySerializer(summaries, many=True).data,
        }

    def render_text(self, payload):
        lines = []
        for group in payload['groups']:
            flags = [name for name in ('abelian', 'nilpotent', 'solvable') if group[name]]
            line = (
                f'{group["name"]:<12} order {group["order"]:<5} exponent {group["exponent"]:<4} '
                f'{" ".join(flags)}'
            )
            if payload['variety'] is not None:
                line += f'  in {payload["variety"]}: {group["member"]}'
            lines.append(line)
        return '\n'.join(lines)
