from django.core.management.base import CommandError
from rest_framework.renderers import JSONRenderer

from ...serializers import ReportSerializer


def write_json(command, data) -> None:
    """One JSON document per line."""
    command.stdout.write(JSONRenderer().render(data).decode("utf-8"))


def write_reports(command, reports) -> None:
    """Stream reports as NDJSON and fail the command if any check failed."""
    for report in reports:
        data = ReportSerializer(report).data
        serializer = ReportSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f"Malformed report {report.case_id}: {serializer.errors}", returncode=1)
        write_json(command, data)
    failed = [report.case_id for report in reports if not report.passed]
    if failed:
        raise CommandError(f"{len(failed)} of {len(reports)} checks failed: {', '.join(failed[:10])}", returncode=1)
