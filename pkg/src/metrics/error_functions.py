# src/metrics/error_functions.py
"""
Métriques d'erreur intégrées (équivalent de error_functions).

Toutes reçoivent (valeurs vraies, valeurs imputées) de même longueur non nulle
et renvoient un réel.
"""

import math
from collections.abc import Sequence

import numpy as np

from src.core.exceptions import MetricError, UndefinedMetricError


def _as_pair(truth: Sequence[float], imputed: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    truth_array = np.asarray(truth, dtype=float)
    imputed_array = np.asarray(imputed, dtype=float)
    if truth_array.shape != imputed_array.shape or truth_array.ndim != 1:
        raise MetricError(
            f"Longueurs différentes : {truth_array.size} valeurs vraies, {imputed_array.size} imputées"
        )
    if truth_array.size == 0:
        raise MetricError("Aucune valeur à comparer.")
    return truth_array, imputed_array


def rmse(truth: Sequence[float], imputed: Sequence[float]) -> float:
    """Racine de l'erreur quadratique moyenne."""
    truth_array, imputed_array = _as_pair(truth, imputed)
    errors = truth_array - imputed_array
    return math.sqrt(float(np.mean(errors * errors)))


def mae(truth: Sequence[float], imputed: Sequence[float]) -> float:
    """Erreur absolue moyenne."""
    truth_array, imputed_array = _as_pair(truth, imputed)
    return float(np.mean(np.abs(truth_array - imputed_array)))


def mape(truth: Sequence[float], imputed: Sequence[float]) -> float:
    """Erreur absolue moyenne en pourcentage ; indéfinie si une valeur vraie est nulle."""
    truth_array, imputed_array = _as_pair(truth, imputed)
    if np.any(truth_array == 0):
        raise UndefinedMetricError("MAPE indéfinie : la vérité contient une valeur nulle")
    return float(100.0 * np.mean(np.abs(truth_array - imputed_array) / np.abs(truth_array)))


def pcv(truth: Sequence[float], imputed: Sequence[float]) -> float:
    """
    Variation de variance en pourcentage : 100 x (var(imputé) - var(vrai)) / var(imputé).

    Variances d'échantillon (diviseur n - 1), rapportées à la variance des valeurs imputées.
    """
    truth_array, imputed_array = _as_pair(truth, imputed)
    if truth_array.size < 2:
        raise UndefinedMetricError("PCV indéfinie pour moins de deux valeurs")
    imputed_var = float(np.var(imputed_array, ddof=1))
    if imputed_var == 0:
        raise UndefinedMetricError("PCV indéfinie : variance des valeurs imputées nulle")
    truth_var = float(np.var(truth_array, ddof=1))
    return 100.0 * (imputed_var - truth_var) / imputed_var


BUILT_IN_METRICS = {
    "rmse": rmse,
    "mae": mae,
    "mape": mape,
    "pcv": pcv,
}
