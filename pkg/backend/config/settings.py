"""
Django settings for the novk project.

Bancada de álgebra computacional para o grupo fundamental de Novikov:
séries de Laurent truncadas, grupos finitamente apresentados, produtos
livres indexados por nível, geradores/relações a menos de translações
e completamento, e homologia de Novikov de somas conexas.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables
env_path = BASE_DIR.parent / '.env'
load_dotenv(dotenv_path=env_path)

# A bancada não serve páginas; a chave só existe porque o Django a exige.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'novk-local-only-not-a-secret')

DEBUG = os.getenv('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Local apps - álgebra
    'apps.core',
    'apps.laurent',
    'apps.fpgroup',
    'apps.freeprod',
    'apps.dtc',
    'apps.novhom',

    # Local apps - superfície de linha de comando
    'apps.cli',
]

MIDDLEWARE = []


# Database
# Só o registro de execuções (apps.cli.models) usa o banco.

DATABASES = {
    'default': {
        'ENGINE': os.getenv('DB_ENGINE', 'django.db.backends.sqlite3'),
        'NAME': os.getenv('DB_NAME', str(BASE_DIR.parent / 'data' / 'novk.sqlite3')),
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Celery Configuration
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', 'redis://localhost:6379/0')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'
# Sem broker configurado as tasks rodam no próprio processo.
CELERY_TASK_ALWAYS_EAGER = os.getenv('CELERY_TASK_ALWAYS_EAGER', 'True') == 'True'
CELERY_TASK_EAGER_PROPAGATES = True

# Limites dos algoritmos
NOVK_MAX_COSETS = int(os.getenv('NOVK_MAX_COSETS', '100000'))
NOVK_MIN_GENERATORS_BUDGET = int(os.getenv('NOVK_MIN_GENERATORS_BUDGET', '512'))
NOVK_MIN_GENERATORS_CAP = int(os.getenv('NOVK_MIN_GENERATORS_CAP', '3'))
NOVK_SPAN_MAX_STATES = int(os.getenv('NOVK_SPAN_MAX_STATES', '200000'))
NOVK_REFUTE_MAX_CANDIDATES = int(os.getenv('NOVK_REFUTE_MAX_CANDIDATES', '20000'))

# Padrões da linha de comando
NOVK_DEFAULT_WINDOW = os.getenv('NOVK_DEFAULT_WINDOW', '0:3')
NOVK_DEFAULT_TRUNC = int(os.getenv('NOVK_DEFAULT_TRUNC', '8'))
NOVK_DEFAULT_DIMENSION = int(os.getenv('NOVK_DEFAULT_DIMENSION', '4'))

# Registro de execuções da CLI no banco
NOVK_RECORD_RUNS = os.getenv('NOVK_RECORD_RUNS', 'False') == 'True'

# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('LOG_LEVEL', 'WARNING'),
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        'django': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
