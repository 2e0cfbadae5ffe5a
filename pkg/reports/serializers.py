"""
Structured report serializers.

Every report dataclass has a serializer whose `save()` rebuilds the
dataclass from a parsed document, so emitted reports round-trip.
"""
from rest_framework import serializers

from classification.cfs import CfsReport, SizeStats, TheoremReport
from classification.lemmas import LemmaSummary
from factoring.engine import (
    ComplementSet,
    FactorizationResult,
    FactorResult,
    KFactorization,
    Reason,
    Side,
)
from groups.specs import GroupSpec
from groups.summary import ElementInfo, GroupSummary
from subsets.bitsets import Subset


class SubsetField(serializers.Field):
    """A subset as {"order": n, "elements": [indices]}."""

    default_error_messages = {
        "invalid": "Expected an object with an integer order and a list of element indices.",
    }

    def to_representation(self, value: Subset):
        return {"order": value.order, "elements": list(value.indices)}

    def to_internal_value(self, data):
        try:
            return Subset.from_indices(int(data["order"]), [int(x) for x in data["elements"]])
        except (KeyError, TypeError, ValueError):
            self.fail("invalid")


class EnumField(serializers.ChoiceField):
    def __init__(self, enum, **kwargs):
        self.enum = enum
        super().__init__(choices=[member.value for member in enum], **kwargs)

    def to_representation(self, value):
        return self.enum(value).value

    def to_internal_value(self, data):
        return self.enum(super().to_internal_value(data))


class DataclassSerializer(serializers.Serializer):
    """Serializer whose save() returns an instance of `dataclass`."""

    dataclass = None

    def create(self, validated_data):
        values = {name: self._build(self.fields[name], value) for name, value in validated_data.items()}
        return self.dataclass(**values)

    @classmethod
    def _build(cls, field, value):
        if value is None:
            return None
        if isinstance(field, serializers.ListSerializer):
            return tuple(cls._build(field.child, item) for item in value)
        if isinstance(field, DataclassSerializer):
            return field.create(value)
        if isinstance(field, serializers.ListField):
            return tuple(value)
        return value


class GroupSpecSerializer(DataclassSerializer):
    dataclass = GroupSpec

    expression = serializers.CharField()
    order = serializers.IntegerField(min_value=1)


class FactorResultSerializer(DataclassSerializer):
    dataclass = FactorResult

    is_factor = serializers.BooleanField()
    complement = SubsetField(allow_null=True)
    side = EnumField(Side)
    nodes_explored = serializers.IntegerField(min_value=0)
    exhausted = serializers.BooleanField()
    reason = EnumField(Reason)
    verdict = serializers.CharField(read_only=True)


class ComplementSetSerializer(DataclassSerializer):
    dataclass = ComplementSet

    subset = SubsetField()
    side = EnumField(Side)
    complements = serializers.ListField(child=SubsetField())


class KFactorizationSerializer(DataclassSerializer):
    dataclass = KFactorization

    parts = serializers.ListField(child=SubsetField())
    sizes = serializers.ListField(child=serializers.IntegerField(), read_only=True)


class FactorizationResultSerializer(DataclassSerializer):
    dataclass = FactorizationResult

    factorization = KFactorizationSerializer(allow_null=True)
    sizes = serializers.ListField(child=serializers.IntegerField(min_value=1))
    nodes_explored = serializers.IntegerField(min_value=0)
    exhausted = serializers.BooleanField()
    verdict = serializers.CharField(read_only=True)


class SizeStatsSerializer(DataclassSerializer):
    dataclass = SizeStats

    size = serializers.IntegerField(min_value=1)
    tested = serializers.IntegerField(min_value=0)
    nonfactors = serializers.IntegerField(min_value=0)
    undecided = serializers.IntegerField(min_value=0)
    examples = serializers.ListField(child=SubsetField())
    trivial = serializers.BooleanField()
    complete = serializers.BooleanField()


class CfsReportSerializer(DataclassSerializer):
    dataclass = CfsReport

    group = GroupSpecSerializer()
    holds = serializers.BooleanField()
    verdict = serializers.CharField(read_only=True)
    witness = SubsetField(allow_null=True)
    witness_result = FactorResultSerializer(allow_null=True)
    sizes = SizeStatsSerializer(many=True)
    census = serializers.BooleanField()
    pruned = serializers.BooleanField()
    nodes_explored = serializers.IntegerField(min_value=0)

    def validate(self, attrs):
        if attrs["holds"] and attrs["witness"] is not None:
            raise serializers.ValidationError({"witness": "A report that holds cannot carry a witness."})
        return attrs


class TheoremReportSerializer(DataclassSerializer):
    dataclass = TheoremReport

    max_order = serializers.IntegerField(min_value=1)
    reports = CfsReportSerializer(many=True)
    expected_positive = serializers.ListField(child=serializers.CharField())
    observed_positive = serializers.ListField(child=serializers.CharField())
    excluded_trivial = serializers.ListField(child=serializers.CharField())
    mismatches = serializers.ListField(child=serializers.CharField())
    passed = serializers.BooleanField(read_only=True)


class LemmaSummarySerializer(DataclassSerializer):
    dataclass = LemmaSummary

    lemma = serializers.CharField()
    scope = serializers.CharField()
    checked = serializers.IntegerField(min_value=0)
    passed = serializers.IntegerField(min_value=0)
    failures = serializers.ListField(child=serializers.CharField())
    ok = serializers.BooleanField(read_only=True)


class ElementInfoSerializer(DataclassSerializer):
    dataclass = ElementInfo

    index = serializers.IntegerField(min_value=0)
    name = serializers.CharField()
    order = serializers.IntegerField(min_value=1)
    inverse = serializers.CharField()


class GroupSummarySerializer(DataclassSerializer):
    dataclass = GroupSummary

    group = GroupSpecSerializer()
    abelian = serializers.BooleanField()
    elements = ElementInfoSerializer(many=True)
    subgroup_orders = serializers.ListField(child=serializers.IntegerField(min_value=1))


class ReportSerializer(serializers.Serializer):
    """One document per command invocation."""

    command = serializers.CharField()
    inputs = serializers.DictField()
    verdict = serializers.CharField()
    witness = serializers.CharField(allow_null=True, required=False)
    complement = serializers.CharField(allow_null=True, required=False)
    stats = serializers.DictField()
    version = serializers.CharField()
    report = serializers.JSONField()


PAYLOAD_SERIALIZERS = {
    "is_factor": FactorResultSerializer,
    "find_complements": ComplementSetSerializer,
    "find_factorization": FactorizationResultSerializer,
    "check_cfs": CfsReportSerializer,
    "verify_theorem": TheoremReportSerializer,
    "group_info": GroupSummarySerializer,
    "from_table": GroupSummarySerializer,
}


def load_report(document: dict):
    """Validate an emitted document and rebuild its payload object.

    Returns (envelope, payload) where payload is the report dataclass, or a
    tuple of LemmaSummary for verify_lemmas.
    """
    envelope = ReportSerializer(data=document)
    envelope.is_valid(raise_exception=True)
    command = envelope.validated_data["command"]
    if command == "verify_lemmas":
        payload = LemmaSummarySerializer(data=document["report"], many=True)
    else:
        payload = PAYLOAD_SERIALIZERS[command](data=document["report"])
    payload.is_valid(raise_exception=True)
    built = payload.save()
    return envelope.validated_data, tuple(built) if command == "verify_lemmas" else built
