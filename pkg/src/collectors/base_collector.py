# src/collectors/base_collector.py
import logging
import os
from abc import ABC, abstractmethod
from typing import Any

import pandas as pd

from src.core.exceptions import DataError, IncompleteInputError
from src.models.entities.time_series_entity import TimeSeries
from src.utils.formatters.number_formatter import parse_finite_real

logger: logging.Logger = logging.getLogger(__name__)

# Jetons traités comme cellules manquantes
MISSING_TOKENS = frozenset({"", "NA", "N/A", "NAN", "NULL", "NONE"})


def is_missing_token(cell: str) -> bool:
    return cell.strip().upper() in MISSING_TOKENS


class BaseCollector(ABC):
    """
    Lecture d'une série temporelle complète depuis une source tabulaire.

    Les sous-classes indiquent où lire le fichier et quelle période lui associer ;
    la détection d'en-tête, le choix de colonne et le contrôle de complétude sont
    communs.
    """

    # ============================================================================
    # 🔶 Méthodes abstraites (contrat à implémenter dans les classes concrètes)
    # ============================================================================

    @abstractmethod
    def get_source_path(self) -> str:
        """Chemin du fichier CSV à lire."""
        pass

    @abstractmethod
    def get_series_label(self) -> str:
        """Identifiant lisible de la série produite."""
        pass

    def get_period(self) -> int | None:
        """Période saisonnière associée à la série (None si inconnue)."""
        return None

    def get_column(self) -> str | int | None:
        """Colonne à lire : nom, indice base zéro, ou None pour la première numérique."""
        return None

    # ============================================================================
    # 🧰 Méthodes utilitaires réutilisables par tous les collecteurs
    # ============================================================================

    def get_csv_reader_options(self) -> dict[str, Any]:
        """Arguments pour pd.read_csv : tout en texte, aucune conversion implicite des NA."""
        return {
            "header": None,
            "dtype": str,
            "keep_default_na": False,
            "skipinitialspace": True,
            "comment": "#",
        }

    def read_csv_file(self, file_path: str) -> pd.DataFrame:
        if not os.path.exists(file_path):
            logger.error(f"Fichier non trouvé : {file_path}")
            raise DataError(f"Fichier introuvable : {file_path}")
        try:
            return pd.read_csv(file_path, **self.get_csv_reader_options())
        except pd.errors.EmptyDataError as e:
            logger.error(f"Fichier vide : {file_path}")
            raise IncompleteInputError(f"Fichier vide : {file_path}") from e
        except (pd.errors.ParserError, OSError, UnicodeDecodeError) as e:
            logger.error(f"Erreur lecture CSV {file_path}: {e}")
            raise DataError(f"CSV illisible ({file_path}) : {e}") from e

    def detect_header(self, df: pd.DataFrame) -> bool:
        """
        La première ligne est un en-tête si aucune de ses cellules n'est numérique
        et qu'au moins une n'est pas un jeton manquant.
        """
        first_row = [str(cell) for cell in df.iloc[0]]
        has_number = any(parse_finite_real(cell) is not None for cell in first_row)
        has_text = any(not is_missing_token(cell) for cell in first_row)
        return has_text and not has_number

    def is_numeric_column(self, cells: pd.Series) -> bool:
        present = [str(c) for c in cells if not is_missing_token(str(c))]
        return bool(present) and all(parse_finite_real(c) is not None for c in present)

    def select_column(self, df: pd.DataFrame, header: list[str] | None) -> int:
        column = self.get_column()
        if column is None:
            for index in range(df.shape[1]):
                if self.is_numeric_column(df.iloc[:, index]):
                    return index
            raise DataError(f"Aucune colonne numérique dans {self.get_source_path()}")

        if isinstance(column, int) or (isinstance(column, str) and column.isdigit()):
            index = int(column)
            if not 0 <= index < df.shape[1]:
                raise DataError(
                    f"Colonne {index} hors limites ({df.shape[1]} colonnes) "
                    f"dans {self.get_source_path()}"
                )
            return index

        if header is None or column not in header:
            raise DataError(f"Colonne '{column}' absente de {self.get_source_path()}")
        return header.index(column)

    def parse_values(self, cells: pd.Series, column_name: str) -> tuple[float, ...]:
        values: list[float] = []
        for row, raw in enumerate(cells):
            cell = str(raw)
            if is_missing_token(cell):
                raise IncompleteInputError(
                    f"Cellule manquante ligne {row + 1}, colonne '{column_name}' : "
                    "la série d'entrée doit être complète."
                )
            value = parse_finite_real(cell)
            if value is None:
                raise DataError(
                    f"Valeur non numérique ou non finie ligne {row + 1}, "
                    f"colonne '{column_name}' : {cell!r}"
                )
            values.append(value)
        return tuple(values)

    # ============================================================================
    # 🔁 Pipeline de chargement
    # ============================================================================

    def collect_series(self) -> TimeSeries:
        path = self.get_source_path()
        df = self.read_csv_file(path)
        if df.empty:
            raise IncompleteInputError(f"Fichier vide : {path}")

        header: list[str] | None = None
        if self.detect_header(df):
            header = [str(cell).strip() for cell in df.iloc[0]]
            df = df.iloc[1:].reset_index(drop=True)
            if df.empty:
                raise IncompleteInputError(f"Aucune donnée après l'en-tête : {path}")

        index = self.select_column(df, header)
        column_name = header[index] if header else str(index)
        values = self.parse_values(df.iloc[:, index], column_name)

        series = TimeSeries(values=values, period=self.get_period(), label=self.get_series_label())
        logger.info(
            f"Série '{series.label}' chargée : {len(series)} valeurs "
            f"(colonne '{column_name}', période {series.period})"
        )
        return series
