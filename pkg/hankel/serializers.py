# hankel/serializers.py
"""
Rendering of command results as JSON (DRF serializers + JSONRenderer), CSV and
plain text.

Exact values are written as "p/q" strings (q omitted when 1, no whitespace);
float-mode values are mpmath numbers and come out as JSON numbers, or as decimal
strings when the requested digits exceed what a double holds.
"""
import csv
import io
from fractions import Fraction

from mpmath import mp
from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .models import ExactMatrix

# significant digits a JSON number survives with (IEEE double)
DOUBLE_DIGITS = 17


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value, digits: int = DOUBLE_DIGITS) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return mp.nstr(value, digits)


class ScalarField(serializers.Field):
    default_error_messages = {
        "invalid": 'Expected a rational string "p" or "p/q".',
    }

    def to_representation(self, value):
        if isinstance(value, Fraction):
            return format_rational(value)
        digits = self.context.get("digits", DOUBLE_DIGITS)
        if digits > DOUBLE_DIGITS:
            return mp.nstr(value, digits)
        return float(value)

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail("invalid")
        try:
            return Fraction(data)
        except (ValueError, ZeroDivisionError):
            self.fail("invalid")


class MatrixField(serializers.ListField):
    def __init__(self, **kwargs):
        super().__init__(child=serializers.ListField(child=ScalarField()), **kwargs)

    def to_representation(self, value):
        if isinstance(value, ExactMatrix):
            value = value.rows()
        return super().to_representation(value)


class ResultSerializer(serializers.Serializer):
    """Members shared by every command's output."""

    family = serializers.CharField()
    n = serializers.IntegerField(min_value=0)
    params = serializers.DictField(child=ScalarField())
    method = serializers.CharField(required=False)
    normalized = serializers.BooleanField(required=False)
    formula = serializers.CharField(required=False)


class MatrixResultSerializer(ResultSerializer):
    result = MatrixField()

    def validate_result(self, rows):
        try:
            return ExactMatrix(rows)
        except ValueError as exc:
            raise serializers.ValidationError(str(exc))


class DetResultSerializer(ResultSerializer):
    result = ScalarField()
    det = ScalarField()


class KernelResultSerializer(ResultSerializer):
    x = ScalarField()
    y = ScalarField()
    result = ScalarField()


class CheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    i = serializers.IntegerField(required=False, allow_null=True)
    j = serializers.IntegerField(required=False, allow_null=True)
    expected = ScalarField(required=False, allow_null=True)
    actual = ScalarField(required=False, allow_null=True)


class VerifyReportSerializer(serializers.Serializer):
    family = serializers.CharField(source="spec.family")
    n = serializers.IntegerField()
    params = serializers.DictField(child=ScalarField(), source="spec.params")
    passed = serializers.BooleanField()
    checks = CheckSerializer(many=True)


class DiscrepancyNoteSerializer(serializers.Serializer):
    family = serializers.CharField(source="spec.family")
    n = serializers.IntegerField()
    params = serializers.DictField(child=ScalarField(), source="spec.params")
    formula = serializers.CharField(source="formula_id")
    digits = serializers.IntegerField()
    printed_value = ScalarField(allow_null=True)
    reference_value = ScalarField()
    exact_value = ScalarField()
    agrees = serializers.BooleanField()
    relative_error = ScalarField(allow_null=True)
    printed_matrix_det = ScalarField(required=False, allow_null=True)
    note = serializers.CharField(allow_blank=True)


def render_json(data) -> str:
    return JSONRenderer().render(data).decode("utf-8")


def parse_matrix_json(payload) -> ExactMatrix:
    """Read the "result" matrix back out of `gen`/`inv` JSON output."""
    if isinstance(payload, str):
        payload = payload.encode("utf-8")
    serializer = MatrixResultSerializer(data=JSONParser().parse(io.BytesIO(payload)))
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data["result"]


def render_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def render_pretty_matrix(rows) -> str:
    """Right-aligned columns, one matrix row per line."""
    if not rows:
        return ""
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows
    ) + "\n"
