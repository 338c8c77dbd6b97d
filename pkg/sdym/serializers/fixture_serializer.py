from rest_framework import serializers

from ..algebra import ConstMatrix, format_gaussian, parse_gaussian
from ..exceptions import DimensionMismatchError
from ..series import SolutionFixture, TruncatedSeries


class SeriesField(serializers.Field):
    """A truncated series as JSON: exact scalars are "a/b+c/di" strings."""

    default_error_messages = {
        "invalid": "Series must be an object with n, cap, valid and coeffs",
        "coefficient": "Invalid coefficient: {detail}",
    }

    def to_representation(self, series: TruncatedSeries) -> dict:
        return {
            "n": series.n,
            "cap": series.cap,
            "valid": series.valid,
            "coeffs": [
                {"exponent": list(e), "matrix": [[format_gaussian(v) for v in row] for row in m.rows]}
                for e, m in series.items()
            ],
        }

    def to_internal_value(self, data) -> TruncatedSeries:
        if not isinstance(data, dict) or not {"n", "cap", "valid", "coeffs"} <= set(data):
            self.fail("invalid")
        coeffs = {}
        try:
            for item in data["coeffs"]:
                exponent = tuple(int(k) for k in item["exponent"])
                if len(exponent) != 4 or min(exponent) < 0:
                    raise ValueError(f"bad exponent {item['exponent']}")
                coeffs[exponent] = ConstMatrix.of([[parse_gaussian(v) for v in row] for row in item["matrix"]])
        except (KeyError, TypeError, ValueError, DimensionMismatchError) as e:
            self.fail("coefficient", detail=str(e))
        return TruncatedSeries.build(int(data["n"]), int(data["cap"]), int(data["valid"]), coeffs)


class FixtureSerializer(serializers.Serializer):
    tag = serializers.CharField()
    seed = serializers.IntegerField(allow_null=True, required=False, default=None)
    degree = serializers.IntegerField(min_value=0)
    n = serializers.IntegerField(min_value=2)
    X = SeriesField()
    J = SeriesField()
    Jinv = SeriesField()

    def validate(self, attrs: dict) -> dict:
        for name in ("X", "J", "Jinv"):
            series = attrs[name]
            if series.n != attrs["n"] or series.cap != attrs["degree"]:
                raise serializers.ValidationError(f"{name} does not match the fixture dimension or degree")
        return attrs

    def create(self, validated_data: dict) -> SolutionFixture:
        return SolutionFixture(**validated_data)
