from functools import wraps

from django.core.management.base import CommandError


def options_injector(serializer_class):
    def decorator(handle):
        @wraps(handle)
        def wrapper(command, *args, **options):
            data = {name: value for name, value in options.items() if value is not None}
            serializer = serializer_class(data=data)
            if not serializer.is_valid():
                raise CommandError(_format_errors(serializer.errors), returncode=2)
            return handle(command, *args, serializer.validated_data, **options)
        return wrapper
    return decorator


def _format_errors(errors) -> str:
    if isinstance(errors, dict):
        return "; ".join(f"{field}: {_format_errors(detail)}" for field, detail in errors.items())
    if isinstance(errors, list):
        return " ".join(_format_errors(detail) for detail in errors)
    return str(errors)
