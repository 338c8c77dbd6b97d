from .options_injector import options_injector
from .service_injector import service_injector

__all__ = ["options_injector", "service_injector"]
