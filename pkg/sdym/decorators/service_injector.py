from functools import wraps

from ..repositories import FixtureRepository
from ..services import FixtureService, VerificationService


def _build(service_class):
    if service_class is FixtureService:
        return FixtureService(FixtureRepository())
    if service_class is VerificationService:
        return VerificationService(FixtureService(FixtureRepository()))
    return service_class()


def service_injector(service_class):
    def decorate(handle):
        @wraps(handle)
        def wrapper(command, *args, **options):
            service = _build(service_class)
            return handle(command, service, *args, **options)
        return wrapper
    return decorate
