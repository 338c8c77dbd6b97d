import logging

from ..exceptions import SdymError
from ..jetexpr import RewriteContext, fresh_context, normalize, parse, to_latex, to_text
from ..utils import Result, engine_setting

logger = logging.getLogger(__name__)


class ExpressionService:

    def __init__(self, context: RewriteContext | None = None):
        self.context = context or fresh_context(engine_setting("MATRIX_DIMENSION"))

    def canonical_form(self, text: str, output_format: str = "text") -> Result[dict] | Result[str]:
        """Parse, normalize and print an expression."""
        try:
            polynomial = normalize(parse(text, self.context), self.context)
        except SdymError as e:
            logger.info(f"Rejected expression {text!r}: {type(e).__name__}")
            return Result.error(str(e))
        rendered = to_latex(polynomial) if output_format == "latex" else to_text(polynomial)
        return Result.success({
            "input": text,
            "canonical": rendered,
            "terms": len(polynomial),
        })
