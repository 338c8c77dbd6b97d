from django.conf import settings

DEFAULTS = {
    "DEFAULT_DEGREE": 6,
    "DEFAULT_SEED": 42,
    "MATRIX_DIMENSION": 2,
    "SYMBOLIC_LEVEL_CAP": 2,
    "ORACLE_LEVEL_CAP": 3,
    "CORPUS_SIZE": 200,
    "CORPUS_DEPTH": 3,
    "FIXTURE_CACHE_TIMEOUT": 3600,
    "M_VALUE": None,
}


def engine_setting(name: str):
    """Read one engine knob from settings.SDYM, falling back to the defaults."""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown engine setting: {name}")
    configured = getattr(settings, "SDYM", {}) or {}
    return configured.get(name, DEFAULTS[name])
