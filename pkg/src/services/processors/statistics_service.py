# src/services/processors/statistics_service.py
import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.core.exceptions import ConfigurationError
from src.models.entities.error_profile_entity import ErrorProfile

logger: logging.Logger = logging.getLogger(__name__)

WHISKER_IQR_FACTOR = 1.5


@dataclass(frozen=True)
class BoxStatistics:
    """
    Statistiques d'une boîte à moustaches.

    Quartiles selon la règle « type 7 » (interpolation linéaire entre statistiques
    d'ordre, défaut de numpy.quantile). Les moustaches s'arrêtent à l'observation
    la plus extrême restant dans [q1 - 1,5 IQR, q3 + 1,5 IQR].
    """

    q1: float
    median: float
    q3: float
    whisker_low: float
    whisker_high: float
    outliers: tuple[float, ...]
    inliers: tuple[float, ...]

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1


def box_statistics(values: Any) -> BoxStatistics:
    """
    Example:
        >>> box_statistics([1, 2, 3, 4, 100]).outliers
        (100.0,)
    """
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        raise ConfigurationError("Aucune valeur pour la boîte à moustaches.")
    q1, median, q3 = (float(q) for q in np.quantile(data, [0.25, 0.5, 0.75]))
    low_fence = q1 - WHISKER_IQR_FACTOR * (q3 - q1)
    high_fence = q3 + WHISKER_IQR_FACTOR * (q3 - q1)
    inside = (data >= low_fence) & (data <= high_fence)
    return BoxStatistics(
        q1=q1,
        median=median,
        q3=q3,
        whisker_low=float(data[inside].min()),
        whisker_high=float(data[inside].max()),
        outliers=tuple(float(v) for v in data[~inside]),
        inliers=tuple(float(v) for v in data[inside]),
    )


class StatisticsService:
    def __init__(self):
        logger.debug("StatisticsService initialized.")

    def box_statistics_for_profile(
        self, profile: ErrorProfile
    ) -> dict[str, list[BoxStatistics]]:
        """Une boîte par (méthode, point de grille), dans l'ordre du profil."""
        logger.debug(
            f"Boîtes à moustaches : {len(profile.methods)} méthodes x "
            f"{len(profile.missing_percent)} pourcentages"
        )
        return {
            name: [box_statistics(row) for row in profile.errall[name]]
            for name in profile.methods
        }

    def value_range(self, profile: ErrorProfile, use_raw: bool) -> tuple[float, float]:
        """Étendue des valeurs tracées (erreurs brutes ou moyennes)."""
        if use_raw:
            values = [e for name in profile.methods for row in profile.errall[name] for e in row]
        else:
            values = [m for name in profile.methods for m in profile.means[name]]
        return float(min(values)), float(max(values))
