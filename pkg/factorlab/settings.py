from pathlib import Path
import os


BASE_DIR = Path(__file__).resolve().parent.parent

# Security
# Fail fast if missing in non-debug environments
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY") or (
    "dev-only-insecure-key" if os.environ.get("DJANGO_DEBUG", "1") == "1" else None
)
if SECRET_KEY is None:
    raise RuntimeError("DJANGO_SECRET_KEY must be set in production")
DEBUG = os.environ.get("DJANGO_DEBUG", "0") == "1"
ALLOWED_HOSTS = []

# Applications
INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    # Third-party
    "rest_framework",
    "groups",
    "subsets",
    "factoring",
    "constructions",
    "witnesses",
    "classification",
    "reports",
]


# Database: Postgres via env when configured, local SQLite otherwise.
# Only `--record` runs touch the database.
if os.environ.get("POSTGRES_HOST"):
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.postgresql",
            "NAME": os.environ.get("POSTGRES_DB", "factorlab"),
            "USER": os.environ.get("POSTGRES_USER", "factorlab"),
            "PASSWORD": os.environ.get("POSTGRES_PASSWORD", "factorlab"),
            "HOST": os.environ.get("POSTGRES_HOST"),
            "PORT": os.environ.get("POSTGRES_PORT", "5432"),
        }
    }
else:
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": BASE_DIR / "factorlab.sqlite3",
        }
    }


# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = True
USE_TZ = True


def _optional_int(name):
    value = os.environ.get(name, "")
    return int(value) if value else None


# Verification engine
FACTORLAB = {
    # Stamped into every structured report
    "VERSION": "1.0.0",
    # Largest group order verify_theorem accepts
    "CATALOG_BOUND": int(os.environ.get("FACTORLAB_CATALOG_BOUND", "16")),
    # None means searches always run to exhaustion
    "NODE_BUDGET": _optional_int("FACTORLAB_NODE_BUDGET"),
    "CENSUS_EXAMPLES": int(os.environ.get("FACTORLAB_CENSUS_EXAMPLES", "5")),
    "LEMMA_SAMPLE_SIZE": int(os.environ.get("FACTORLAB_LEMMA_SAMPLE_SIZE", "100")),
    "LEMMA_SAMPLE_SEED": int(os.environ.get("FACTORLAB_LEMMA_SEED", "20250101")),
    "AUTOMORPHISM_PRUNING": os.environ.get("FACTORLAB_PRUNING", "0") == "1",
}


# Celery Configuration for distributed classification
CELERY_BROKER_URL = os.environ.get('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = os.environ.get('CELERY_RESULT_BACKEND', 'redis://localhost:6379/0')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = os.environ.get('CELERY_TASK_ALWAYS_EAGER', '0') == '1'


# Logging (JSON-ready minimal config)
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {"format": "%(asctime)s %(levelname)s %(name)s %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "standard"},
    },
    "root": {"handlers": ["console"], "level": os.environ.get("LOG_LEVEL", "WARNING")},
    "loggers": {
        "factoring": {
            "handlers": ["console"],
            "level": os.environ.get("FACTORING_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
        "classification": {
            "handlers": ["console"],
            "level": os.environ.get("LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}


DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"
