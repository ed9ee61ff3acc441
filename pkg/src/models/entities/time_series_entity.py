# src/models/entities/time_series_entity.py

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from src.core.exceptions import ConfigurationError, IncompleteInputError


class Missing(Enum):
    """Marqueur distinct d'une observation retirée (jamais un NaN en interne)."""

    MISSING = "NA"

    def __repr__(self) -> str:
        return "Missing"


MISSING = Missing.MISSING


@dataclass(frozen=True)
class TimeSeries:
    """
    Série temporelle complète servant de vérité terrain.

    Attributes:
        values (tuple[float, ...]): Observations ordonnées, toutes finies.
        period (int | None): Nombre d'observations par cycle saisonnier (12 mensuel, 4 trimestriel).
        label (str): Identifiant lisible (nom du jeu de données, du fichier...).
    """

    values: tuple[float, ...]
    period: int | None = None
    label: str = "series"

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise IncompleteInputError(f"Série '{self.label}' vide.")
        if not all(math.isfinite(v) for v in values):
            raise IncompleteInputError(
                f"Série '{self.label}' incomplète : valeurs manquantes ou infinies."
            )
        if self.period is not None and not 2 <= self.period <= len(values):
            raise ConfigurationError(
                f"Période {self.period} invalide pour une série de longueur {len(values)} "
                "(attendu 2 <= période <= longueur)."
            )

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@dataclass(frozen=True)
class MissingnessMask:
    """Indices (base zéro, strictement croissants) retirés lors d'un tirage."""

    removed: tuple[int, ...]
    series_length: int

    def __post_init__(self) -> None:
        removed = tuple(int(i) for i in self.removed)
        object.__setattr__(self, "removed", removed)
        if self.series_length < 1:
            raise ConfigurationError(f"Longueur de série invalide : {self.series_length}")
        if any(b <= a for a, b in zip(removed, removed[1:], strict=False)):
            raise ConfigurationError("Les indices retirés doivent être strictement croissants.")
        if removed and (removed[0] < 0 or removed[-1] >= self.series_length):
            raise ConfigurationError(
                f"Indice retiré hors de [0, {self.series_length}) : {removed[0]}..{removed[-1]}"
            )

    def __len__(self) -> int:
        return len(self.removed)

    def as_bool_array(self) -> np.ndarray:
        """Tableau booléen de longueur series_length, True aux positions retirées."""
        flags = np.zeros(self.series_length, dtype=bool)
        flags[list(self.removed)] = True
        return flags


@dataclass(frozen=True)
class GappedSeries:
    """Série à trous : chaque élément est un réel fini ou le marqueur MISSING."""

    values: tuple[float | Missing, ...]
    period: int | None = None
    _observed: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        values = tuple(v if v is MISSING else float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        observed = np.fromiter((v is not MISSING for v in values), dtype=bool, count=len(values))
        observed.setflags(write=False)
        object.__setattr__(self, "_observed", observed)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def observed_mask(self) -> np.ndarray:
        """Tableau booléen en lecture seule, True aux positions observées."""
        return self._observed

    def observed_indices(self) -> np.ndarray:
        return np.flatnonzero(self._observed)

    def missing_indices(self) -> np.ndarray:
        return np.flatnonzero(~self._observed)

    def observed_values(self) -> np.ndarray:
        return np.array([v for v in self.values if v is not MISSING], dtype=float)

    def missing_count(self) -> int:
        return int(len(self.values) - self._observed.sum())

    def is_complete(self) -> bool:
        return bool(self._observed.all())


@dataclass(frozen=True)
class RunSummary:
    """Résumé des séquences maximales d'indices retirés consécutifs."""

    run_lengths: tuple[int, ...]

    @property
    def run_count(self) -> int:
        return len(self.run_lengths)

    @property
    def min_run(self) -> int | None:
        return min(self.run_lengths) if self.run_lengths else None

    @property
    def max_run(self) -> int | None:
        return max(self.run_lengths) if self.run_lengths else None
