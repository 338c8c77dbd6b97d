from .result import Result
from .config import engine_setting

__all__ = ["Result", "engine_setting"]
