from rest_framework import serializers

from core.models import RunRecord


class RunRecordSerializer(serializers.ModelSerializer):
    """Serializer for listing saved runs"""

    class Meta:
        model = RunRecord
        fields = (
            "id",
            "command",
            "suite",
            "catalog",
            "passed",
            "failed",
            "hypothesis_not_met",
            "inconclusive",
            "created",
        )
        read_only_fields = fields


class RunRecordDetailSerializer(RunRecordSerializer):
    """Serializer for a saved run with its report"""

    class Meta(RunRecordSerializer.Meta):
        fields = RunRecordSerializer.Meta.fields + ("report",)
        read_only_fields = fields
