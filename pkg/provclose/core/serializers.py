from rest_framework import serializers

from provclose.core.exceptions import (
    DescriptorSyntaxError,
    PrimeSetError,
    RankError,
    WordSyntaxError,
)
from provclose.core.finoracle.catalog import CATALOG_KINDS
from provclose.core.freeword import Word, parse_word
from provclose.core.variety import PseudovarietyDescriptor, parse_descriptor


class WordField(serializers.Field):
    """A word in the word grammar, parsed with the ``rank`` from the serializer context."""

    default_error_messages = {
        'invalid': '{message}',
        'type': 'Expected a word in the word grammar.',
    }

    def to_internal_value(self, data) -> Word:
        if not isinstance(data, str):
            self.fail('type')
        try:
            return parse_word(data, self.context.get('rank'))
        except (WordSyntaxError, RankError) as e:
            self.fail('invalid', message=e.message)

    def to_representation(self, value: Word) -> str:
        return value.text()


class VarietyField(serializers.Field):
    default_error_messages = {
        'invalid': '{message}',
        'type': 'Expected a pseudovariety such as "GP:2,3" or "Vp:3".',
    }

    def to_internal_value(self, data) -> PseudovarietyDescriptor:
        if not isinstance(data, str):
            self.fail('type')
        try:
            return parse_descriptor(data)
        except (DescriptorSyntaxError, PrimeSetError) as e:
            self.fail('invalid', message=e.message)

    def to_representation(self, value: PseudovarietyDescriptor) -> str:
        return str(value)


# Requests: command options are validated through these
class WordRequestSerializer(serializers.Serializer):
    word = WordField()


class VarietyRequestSerializer(serializers.Serializer):
    variety = VarietyField()


class ClosureRequestSerializer(WordRequestSerializer, VarietyRequestSerializer):
    pass


class MemberRequestSerializer(ClosureRequestSerializer):
    candidate = WordField()


class CatalogEntrySerializer(serializers.Serializer):
    REQUIRED_FIELDS = {
        'cyclic': ['k'],
        'permutation': ['degree', 'generators'],
        'unitriangular': ['modulus'],
    }

    name = serializers.CharField()
    kind = serializers.ChoiceField(choices=CATALOG_KINDS)
    k = serializers.IntegerField(min_value=1, required=False)
    degree = serializers.IntegerField(min_value=1, required=False)
    generators = serializers.ListField(child=serializers.CharField(), required=False)
    modulus = serializers.IntegerField(min_value=1, required=False)

    def validate(self, data):
        missing = [name for name in self.REQUIRED_FIELDS[data['kind']] if name not in data]
        if missing:
            raise serializers.ValidationError(
                {name: f'This field is required for {data["kind"]} groups.' for name in missing}
            )
        return data


# Results
class TraceStepSerializer(serializers.Serializer):
    rule = serializers.CharField()
    statement = serializers.CharField()
    values = serializers.DictField(child=serializers.IntegerField())
    cites = serializers.CharField(allow_null=True)


class RootExpSerializer(serializers.Serializer):
    input = WordField()
    root = WordField()
    exponent = serializers.IntegerField()
    conjugator = WordField()
    core = WordField()


class ClosureResultSerializer(serializers.Serializer):
    input = WordField()
    variety = VarietyField()
    root = WordField()
    exponent = serializers.IntegerField()
    closure_exponent = serializers.IntegerField()
    generator = WordField()
    closed = serializers.BooleanField()
    index = serializers.IntegerField()
    trace = TraceStepSerializer(many=True)
    oracle = serializers.SerializerMethodField()

    def get_oracle(self, result):
        return self.context.get('oracle', {'status': 'skipped'})


class VerdictSerializer(serializers.Serializer):
    input = WordField()
    variety = VarietyField()
    closed = serializers.BooleanField()
    rule = serializers.CharField()
    reason = serializers.CharField()
    cites = serializers.CharField(allow_null=True)


class MembershipSerializer(serializers.Serializer):
    candidate = WordField()
    input = WordField()
    variety = VarietyField()
    member = serializers.BooleanField()
    closure_exponent = serializers.IntegerField()
    generator = WordField()


class WitnessSerializer(serializers.Serializer):
    group = serializers.CharField(source='group.name')
    order = serializers.IntegerField(source='group.order')
    images = serializers.DictField(child=serializers.CharField())
    indices = serializers.ListField(child=serializers.IntegerField(), source='hom.images')


class NecessaryConditionReportSerializer(serializers.Serializer):
    status = serializers.CharField()
    groups_checked = serializers.ListField(child=serializers.CharField())
    homs_checked = serializers.IntegerField()
    counterexample = WitnessSerializer(allow_null=True)
    groups_skipped = serializers.ListField(child=serializers.CharField())


class SeparationOutcomeSerializer(serializers.Serializer):
    power = serializers.IntegerField()
    candidate = WordField()
    status = serializers.CharField()
    witness = WitnessSerializer(allow_null=True)


class GroupSummarySerializer(serializers.Serializer):
    name = serializers.CharField(source='group.name')
    kind = serializers.SerializerMethodField()
    order = serializers.IntegerField(source='flags.order')
    exponent = serializers.IntegerField(source='flags.exponent')
    abelian = serializers.BooleanField(source='flags.abelian')
    nilpotent = serializers.BooleanField(source='flags.nilpotent')
    solvable = serializers.BooleanField(source='flags.solvable')
    derived_length = serializers.IntegerField(source='flags.derived_length')
    sylow_normal = serializers.DictField(
        child=serializers.BooleanField(), source='flags.sylow_normal'
    )
    member = serializers.SerializerMethodField()

    def get_kind(self, summary):
        source = summary['group'].source or {}
        return source.get('kind')

    def get_member(self, summary):
        # True, False, "unsupported", or None when no pseudovariety was given
        return summary.get('member')
