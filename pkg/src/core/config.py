# src/core/config.py
import logging

# Configuration du logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Variables d'environnement locales (.env) : jobs par défaut, fichier de log
load_dotenv()

LOG_FILE_ENV_VAR = "IMPUTE_BENCH_LOG_FILE"
JOBS_ENV_VAR = "IMPUTE_BENCH_JOBS"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Les diagnostics vont sur stderr, la sortie machine reste sur stdout
handlers: list[logging.Handler] = [logging.StreamHandler()]
log_file = os.environ.get(LOG_FILE_ENV_VAR)
if log_file:
    try:
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    except OSError:
        pass

logging.basicConfig(
    level=logging.INFO,
    format=LOG_FORMAT,
    handlers=handlers,
)
logger: logging.Logger = logging.getLogger(__name__)

# Jeux de données embarqués (CSV complets, période saisonnière connue)
DATASETS_DIR = Path(__file__).resolve().parent.parent / "constants" / "datasets"

BUILTIN_DATASETS: dict[str, dict[str, str | int]] = {
    "nottem": {
        "path": str(DATASETS_DIR / "nottem.csv"),
        "period": 12,
        "label": "nottem",
    },
    "austres": {
        "path": str(DATASETS_DIR / "austres.csv"),
        "period": 4,
        "label": "austres",
    },
}
DEFAULT_DATASET = "nottem"

# Méthodes d'imputation par défaut, dans l'ordre du profil
DEFAULT_METHODS: list[str] = [
    "na.approx",
    "na.interp",
    "na.interpolation",
    "na.locf",
    "na.mean",
]

# Paramètres de balayage par défaut
DEFAULT_SAMPLING_SCHEME = "mcar"
DEFAULT_ERROR_PARAMETER = "rmse"
DEFAULT_BLOCK = 50.0
DEFAULT_BLOCK_IS_PERCENT = True
DEFAULT_MISS_PERCENT_FROM = 10.0
DEFAULT_MISS_PERCENT_TO = 90.0
DEFAULT_INTERVAL = 10.0
DEFAULT_REPETITION = 10
DEFAULT_SEED = 0
DEFAULT_SCORE_ON = "removed"
SCORE_SCOPES: list[str] = ["removed", "full"]

# Protocole plugin
DEFAULT_PLUGIN_TIMEOUT = 30.0

# Rendu SVG
DEFAULT_PLOT_WIDTH = 900
DEFAULT_PLOT_HEIGHT = 540
PLOT_TYPES: list[str] = ["boxplot", "line", "bar"]

# Garde-fou pour le placement des blocs MAR
MAX_BLOCK_PLACEMENTS = 10_000


def default_jobs() -> int:
    """
    Nombre de workers par défaut pour le balayage.

    Lit IMPUTE_BENCH_JOBS si défini (éventuellement via .env), sinon le nombre de CPU.
    """
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw:
        try:
            jobs = int(raw)
            if jobs >= 1:
                return jobs
        except ValueError:
            pass
        logger.warning(f"{JOBS_ENV_VAR} invalide ({raw!r}), utilisation du nombre de CPU.")
    return os.cpu_count() or 1
