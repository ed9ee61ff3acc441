# src/collectors/implementations/builtin_dataset_collector.py
import logging

from src.collectors.base_collector import BaseCollector
from src.core.config import BUILTIN_DATASETS
from src.core.exceptions import ConfigurationError
from src.models.entities.time_series_entity import TimeSeries

logger: logging.Logger = logging.getLogger(__name__)


class BuiltinDatasetCollector(BaseCollector):
    """Jeux de données embarqués (nottem, austres) : colonne `value`, période connue."""

    def __init__(self, name: str):
        if name not in BUILTIN_DATASETS:
            raise ConfigurationError(
                f"Jeu de données inconnu : {name!r} (disponibles : {sorted(BUILTIN_DATASETS)})"
            )
        self.name = name
        self.entry = BUILTIN_DATASETS[name]

    def get_source_path(self) -> str:
        return str(self.entry["path"])

    def get_series_label(self) -> str:
        return str(self.entry["label"])

    def get_period(self) -> int | None:
        return int(self.entry["period"])

    def get_column(self) -> str | int | None:
        return "value"


def load_builtin_dataset(name: str, period: int | None = None) -> TimeSeries:
    """Charge nottem ou austres ; `period` remplace la période embarquée si fourni."""
    series = BuiltinDatasetCollector(name).collect_series()
    if period is not None and period != series.period:
        logger.info(f"Période de '{name}' remplacée : {series.period} -> {period}")
        return TimeSeries(values=series.values, period=period, label=series.label)
    return series
