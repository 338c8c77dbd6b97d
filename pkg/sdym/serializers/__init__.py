from .fixture_serializer import FixtureSerializer, SeriesField
from .hierarchy_serializer import HierarchyEntrySerializer
from .options_serializer import (
    HierarchyOptionsSerializer, OracleOptionsSerializer, ParseOptionsSerializer, VerifyOptionsSerializer,
)
from .report_serializer import REPORT_SCHEMA, ReportSerializer

__all__ = [
    "FixtureSerializer", "SeriesField", "HierarchyEntrySerializer",
    "HierarchyOptionsSerializer", "OracleOptionsSerializer", "ParseOptionsSerializer",
    "VerifyOptionsSerializer", "REPORT_SCHEMA", "ReportSerializer",
]
