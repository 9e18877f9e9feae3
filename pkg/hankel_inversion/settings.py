"""
Django settings for the hankel_inversion project.

The project has no web surface and no database: it hosts the `hankel` app,
whose management command is the command-line tool.
"""

# settings.py
import os
from pathlib import Path
from dotenv import load_dotenv
load_dotenv()


BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'dev-secret')
DEBUG = os.getenv('DEBUG', '0') == '1'
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'hankel',
]

# Results are self-contained streams; nothing is persisted.
DATABASES = {}

# REST Framework (serializers + JSONRenderer only; no auth apps installed)
REST_FRAMEWORK = {
    'COMPACT_JSON': True,
    'UNICODE_JSON': True,
    'STRICT_JSON': True,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
}

# Matrix tool
HANKEL_DEFAULT_DIGITS = int(os.getenv('HANKEL_DEFAULT_DIGITS', '17'))
HANKEL_MAX_DIGITS = int(os.getenv('HANKEL_MAX_DIGITS', '1000'))
HANKEL_ERRATA_DIGITS = int(os.getenv('HANKEL_ERRATA_DIGITS', '30'))
HANKEL_LOG_LEVEL = os.getenv('HANKEL_LOG_LEVEL', 'WARNING')

# stdout carries results, so every log record goes to stderr
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'hankel': {
            'handlers': ['stderr'],
            'level': HANKEL_LOG_LEVEL,
            'propagate': False,
        },
    },
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True
