"""
DRF serializers for expansion rows, dimension tables and verification reports.

Exact rationals are rendered as strings ("-5", "3/2") so that the JSON
output is lossless and byte-stable.
"""

from fractions import Fraction

from rest_framework import serializers


class ExactField(serializers.Field):
    """A rational number serialized as its string form."""

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            raise serializers.ValidationError(f"Not a rational number: {data!r}")


class WitnessField(serializers.Field):
    """Witnesses are triples, indices, mappings or strings; rationals become strings."""

    def to_representation(self, value):
        if value is None or isinstance(value, (bool, int, str)):
            return value
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, dict):
            return {str(k): self.to_representation(v) for k, v in value.items()}
        if isinstance(value, (tuple, list)):
            return [self.to_representation(v) for v in value]
        return str(value)


class CoefficientRowSerializer(serializers.Serializer):
    form = serializers.CharField()
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    c = serializers.IntegerField()
    value = ExactField()


class DimensionRowSerializer(serializers.Serializer):
    weight = ExactField()
    dimension = serializers.IntegerField()


class RankRowSerializer(serializers.Serializer):
    weight = serializers.IntegerField()
    monomials = serializers.IntegerField()
    rank = serializers.IntegerField()
    target = serializers.IntegerField()
    classification = serializers.CharField()
    status = serializers.CharField()
    diagnostics = WitnessField()
    polynomial_rank = serializers.IntegerField(allow_null=True)


class CheckResultSerializer(serializers.Serializer):
    id = serializers.CharField()
    status = serializers.ChoiceField(choices=['pass', 'fail', 'skip'])
    witness = WitnessField(allow_null=True)
    detail = serializers.CharField(allow_blank=True)


class VerificationReportSerializer(serializers.Serializer):
    suite = serializers.CharField()
    version = serializers.CharField()
    checksums = serializers.DictField(child=serializers.CharField())
    passed = serializers.BooleanField()
    checks = CheckResultSerializer(many=True)


class ExpandQuerySerializer(serializers.Serializer):
    prec = serializers.IntegerField(min_value=0, required=False)


class DimsQuerySerializer(serializers.Serializer):
    upto = serializers.IntegerField(min_value=0, default=19)
