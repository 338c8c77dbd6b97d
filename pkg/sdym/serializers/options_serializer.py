from rest_framework import serializers

from ..hierarchy import SymmetryOperator
from ..utils import engine_setting

SUITES = ["core", "propositions", "lemma22", "example", "kac-moody", "virasoro", "all"]


def _default_degree() -> int:
    return engine_setting("DEFAULT_DEGREE")


def _default_seed() -> int:
    return engine_setting("DEFAULT_SEED")


class ParseOptionsSerializer(serializers.Serializer):
    expression = serializers.CharField(trim_whitespace=False)
    format = serializers.ChoiceField(choices=["text", "latex"], default="text")


class VerifyOptionsSerializer(serializers.Serializer):
    suite = serializers.ChoiceField(choices=SUITES)
    levels = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    degree = serializers.IntegerField(min_value=2, default=_default_degree)
    rng_seed = serializers.IntegerField(default=_default_seed)

    def validate_levels(self, value):
        if value is not None and value > engine_setting("ORACLE_LEVEL_CAP"):
            raise serializers.ValidationError(
                f"Levels above {engine_setting('ORACLE_LEVEL_CAP')} are out of reach"
            )
        return value


class HierarchyOptionsSerializer(serializers.Serializer):
    seed_family = serializers.CharField()
    depth = serializers.IntegerField(min_value=0)
    format = serializers.ChoiceField(choices=["json", "latex"], default="json")

    def validate_seed_family(self, value: str) -> SymmetryOperator:
        """internal:k (k = 0 for M) or L:k."""
        kind, _, index = value.partition(":")
        if kind not in ("internal", "L") or not index.isdigit():
            raise serializers.ValidationError("Seed family must look like internal:k or L:k")
        index = int(index)
        dimension = engine_setting("MATRIX_DIMENSION") ** 2 - 1
        if kind == "internal" and index > dimension:
            raise serializers.ValidationError(f"internal:k needs 0 <= k <= {dimension}")
        if kind == "L" and not 1 <= index <= 9:
            raise serializers.ValidationError("L:k needs 1 <= k <= 9")
        return SymmetryOperator(kind, index)


class OracleOptionsSerializer(serializers.Serializer):
    degree = serializers.IntegerField(min_value=0, default=_default_degree)
    rng_seed = serializers.IntegerField(default=_default_seed)
    fixture = serializers.ChoiceField(choices=["abelian", "random"], default="random")
    format = serializers.ChoiceField(choices=["report", "json"], default="report")

    def validate(self, attrs: dict) -> dict:
        if attrs["fixture"] == "random" and attrs["degree"] < 2:
            raise serializers.ValidationError("Random fixtures need degree >= 2")
        return attrs
