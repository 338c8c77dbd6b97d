from rest_framework import serializers

from ..jetexpr import to_latex, to_text


class HierarchyEntrySerializer(serializers.Serializer):
    """One hierarchy level. Pass format="latex" in the context for LaTeX expressions."""

    family = serializers.CharField()
    level = serializers.IntegerField()
    phi = serializers.SerializerMethodField()
    q = serializers.SerializerMethodField()
    nonlocal_name = serializers.CharField(allow_null=True)
    definition = serializers.SerializerMethodField()
    phi_local_in_x = serializers.BooleanField()
    q_local_in_j = serializers.BooleanField(allow_null=True)

    def _render(self, expr):
        if expr is None:
            return None
        return to_latex(expr) if self.context.get("format") == "latex" else to_text(expr)

    def get_phi(self, entry):
        return self._render(entry.phi)

    def get_q(self, entry):
        return self._render(entry.q)

    def get_definition(self, entry):
        registry = self.context.get("registry")
        if entry.nonlocal_name is None or registry is None:
            return None
        definition = registry.get(entry.nonlocal_name)
        return {
            "dzbar": self._render(definition.dzbar_def),
            "dybar": self._render(definition.dybar_def),
        }
