from rest_framework import serializers

REPORT_SCHEMA = 1


class ReportSerializer(serializers.Serializer):
    schema = serializers.SerializerMethodField()
    suite = serializers.CharField()
    check = serializers.CharField()
    status = serializers.ChoiceField(choices=["pass", "fail"])
    mode = serializers.ChoiceField(choices=["symbolic", "oracle"])
    witness = serializers.CharField(allow_null=True)
    elapsed = serializers.FloatField()
    config = serializers.DictField()

    def get_schema(self, report) -> int:
        return REPORT_SCHEMA

    def validate(self, attrs: dict) -> dict:
        if attrs.get("status") == "fail" and not attrs.get("witness"):
            raise serializers.ValidationError("A failed check must carry a witness")
        return attrs
