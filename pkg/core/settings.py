"""
Django settings for the core project.

The project has no web surface: it hosts the sdym app, whose management
commands are the command-line interface of the symmetry engine.
"""

from pathlib import Path
from dotenv import load_dotenv
import os
import sys

load_dotenv(".env")

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'sdym-local-only')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'sdym',
]

# The engine keeps no persistent state
DATABASES = {}


# Engine configuration

SDYM = {
    "DEFAULT_DEGREE": int(os.getenv("SDYM_DEFAULT_DEGREE", "6")),
    "DEFAULT_SEED": int(os.getenv("SDYM_DEFAULT_SEED", "42")),
    "MATRIX_DIMENSION": int(os.getenv("SDYM_MATRIX_DIMENSION", "2")),
    "SYMBOLIC_LEVEL_CAP": 2,
    "ORACLE_LEVEL_CAP": 3,
    "CORPUS_SIZE": int(os.getenv("SDYM_CORPUS_SIZE", "200")),
    "CORPUS_DEPTH": 3,
    "FIXTURE_CACHE_TIMEOUT": int(os.getenv("SDYM_FIXTURE_CACHE_TIMEOUT", "3600")),
    # None binds M to sum_k k*tau_k
    "M_VALUE": None,
}

LOG_LEVEL = os.getenv("SDYM_LOG_LEVEL", "INFO")

# Test conditions for settings
if "test" in sys.argv:
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
            'LOCATION': 'sdym-test',
        }
    }

    SDYM["DEFAULT_DEGREE"] = 4
    SDYM["CORPUS_SIZE"] = 20

    LOGGING = {
        'version': 1,
        'disable_existing_loggers': True,
    }
else:
    if os.getenv("SDYM_CACHE_URL"):
        # Shared fixture cache
        CACHES = {
            "default" : {
                "BACKEND" : "django_redis.cache.RedisCache",
                "LOCATION" : os.getenv("SDYM_CACHE_URL"),
                "OPTIONS" : {
                    "CLIENT_CLASS" : "django_redis.client.DefaultClient",
                    "CONNECTION_POOL_KWARGS" : {
                        "max_connections" : 10,
                        "retry_on_timeout" : True,
                    },
                    "SERIALIZER" : "django_redis.serializers.json.JSONSerializer",
                    "PASSWORD" : os.getenv("REDIS_PASSWORD"),
                },
                "KEY_PREFIX" : "sdym_cache",
                "TIMEOUT" : SDYM["FIXTURE_CACHE_TIMEOUT"],
            }
        }
    else:
        CACHES = {
            'default': {
                'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
                'LOCATION': 'sdym-fixtures',
                'TIMEOUT': SDYM["FIXTURE_CACHE_TIMEOUT"],
            }
        }

    # Reports go to stdout, logs to stderr
    LOGGING = {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'plain': {
                'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
            },
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'stream': 'ext://sys.stderr',
                'formatter': 'plain',
            },
        },
        'loggers': {
            'sdym': {
                'handlers': ['console'],
                'level': LOG_LEVEL,
                'propagate': False,
            },
        },
    }

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True
