# src/utils/series/mask_util.py
"""
Utilitaires de masquage : appliquer un masque à une série complète et
récupérer les valeurs vraies aux positions retirées.
"""

import math

from src.core.exceptions import ConfigurationError
from src.models.entities.time_series_entity import (
    MISSING,
    GappedSeries,
    MissingnessMask,
    TimeSeries,
)


def round_half_away_from_zero(value: float) -> int:
    """Arrondi « commercial » : 2.5 -> 3, -2.5 -> -3 (indépendant de la plateforme)."""
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def _check_lengths(series: TimeSeries, mask: MissingnessMask) -> None:
    if mask.series_length != len(series):
        raise ConfigurationError(
            f"Masque prévu pour {mask.series_length} observations, "
            f"série '{series.label}' de longueur {len(series)}."
        )


def apply_mask(series: TimeSeries, mask: MissingnessMask) -> GappedSeries:
    """
    Remplace par MISSING les observations dont l'indice figure dans le masque.

    Args:
        series: Série complète
        mask: Masque de même longueur

    Returns:
        GappedSeries: Série à trous, période conservée

    Raises:
        ConfigurationError: Si les longueurs diffèrent

    Example:
        >>> apply_mask(TimeSeries((1, 2, 3, 4)), MissingnessMask((1, 3), 4)).values
        (1.0, Missing, 3.0, Missing)
    """
    _check_lengths(series, mask)
    removed = set(mask.removed)
    values = tuple(
        MISSING if i in removed else value for i, value in enumerate(series.values)
    )
    return GappedSeries(values=values, period=series.period)


def extract_at(series: TimeSeries, mask: MissingnessMask) -> list[float]:
    """Valeurs vraies aux positions retirées, dans l'ordre des indices."""
    _check_lengths(series, mask)
    return [series.values[i] for i in mask.removed]
