# src/collectors/implementations/csv_file_collector.py
import logging

from src.collectors.base_collector import BaseCollector
from src.models.entities.time_series_entity import TimeSeries

logger: logging.Logger = logging.getLogger(__name__)


class CsvFileCollector(BaseCollector):
    """Série lue dans un fichier CSV fourni par l'utilisateur."""

    def __init__(
        self,
        path: str,
        column: str | int | None = None,
        period: int | None = None,
        label: str | None = None,
    ):
        self.path = path
        self.column = column
        self.period = period
        self.label = label

    def get_source_path(self) -> str:
        return self.path

    def get_series_label(self) -> str:
        if self.label:
            return self.label
        return self.path.replace("\\", "/").rsplit("/", 1)[-1].removesuffix(".csv")

    def get_period(self) -> int | None:
        return self.period

    def get_column(self) -> str | int | None:
        return self.column


def load_csv(path: str, column: str | int | None = None, period: int | None = None) -> TimeSeries:
    """
    Charge une colonne numérique complète d'un fichier CSV.

    Args:
        path: Chemin du fichier
        column: Nom ou indice (base zéro) de la colonne ; par défaut la première numérique
        period: Période saisonnière à associer à la série

    Returns:
        TimeSeries: Série complète

    Raises:
        DataError: Fichier absent, colonne absente ou non numérique
        IncompleteInputError: Cellule `NA` ou vide dans la colonne retenue

    Example:
        >>> load_csv("src/constants/datasets/austres.csv", period=4).period
        4
    """
    return CsvFileCollector(path, column=column, period=period).collect_series()
