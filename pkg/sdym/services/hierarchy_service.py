import logging

from ..exceptions import SdymError
from ..hierarchy import HierarchyCatalog, SymmetryOperator
from ..jetexpr import RewriteContext, fresh_context
from ..serializers import HierarchyEntrySerializer
from ..utils import Result, engine_setting

logger = logging.getLogger(__name__)


class HierarchyService:

    def __init__(self, context: RewriteContext | None = None):
        self.context = context or fresh_context(engine_setting("MATRIX_DIMENSION"))
        self.catalog = HierarchyCatalog(self.context)

    def generate(self, operator: SymmetryOperator, depth: int,
                 output_format: str = "json") -> Result[list[dict]] | Result[str]:
        """Levels 0..depth of the hierarchy seeded by ``operator``."""
        try:
            entries = self.catalog.hierarchy(operator, depth)
        except SdymError as e:
            logger.error(f"Error generating {operator.label} hierarchy: {str(e)}")
            return Result.error(f"Error generating {operator.label} hierarchy: {str(e)}")

        logger.info(f"Generated {operator.label} hierarchy to depth {depth}")
        serializer = HierarchyEntrySerializer(
            entries, many=True,
            context={"format": "latex" if output_format == "latex" else "text", "registry": self.context.registry},
        )
        return Result.success(list(serializer.data))
