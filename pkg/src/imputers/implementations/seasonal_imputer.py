# src/imputers/implementations/seasonal_imputer.py
"""
Imputation saisonnière (équivalent de na.interp).

Étapes :
1. Pré-remplissage des trous par moindres carrés sur les points observés
   (termes de Fourier saisonniers + tendance polynomiale de bas degré), borné
   à la plage observée ; le modèle est réduit tant que le système est mal
   conditionné ou compte plus de termes de Fourier que de phases observées
2. Décomposition additive classique de la série pré-remplie : tendance par
   moyenne mobile centrée de fenêtre `period`, composante saisonnière = moyennes
   par phase de la série sans tendance, recentrées
3. Interpolation linéaire de la série désaisonnalisée observée, puis ajout de
   la composante saisonnière
"""

import logging
from typing import Any

import numpy as np

from src.imputers.base_imputer import BaseImputer
from src.imputers.implementations.linear_imputer import linear_fill
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries

logger: logging.Logger = logging.getLogger(__name__)

MAX_HARMONICS = 5
MAX_TREND_DEGREE = 3
MAX_CONDITION = 1e3


def _design_matrix(length: int, period: int, harmonics: int, degree: int) -> np.ndarray:
    t = np.arange(length, dtype=float)
    scaled = 2.0 * t / max(length - 1, 1) - 1.0
    columns = [scaled**d for d in range(degree + 1)]
    for k in range(1, harmonics + 1):
        angle = 2.0 * np.pi * k * t / period
        for column in (np.cos(angle), np.sin(angle)):
            # sin à la fréquence de Nyquist est identiquement nul sur la grille entière
            if np.max(np.abs(column)) > 1e-9:
                columns.append(column)
    return np.column_stack(columns)


def _well_conditioned(observed_design: np.ndarray) -> bool:
    """Conditionnement de la matrice aux colonnes normalisées sous MAX_CONDITION."""
    norms = np.linalg.norm(observed_design, axis=0)
    if np.any(norms == 0):
        return False
    return bool(np.linalg.cond(observed_design / norms) <= MAX_CONDITION)


def regression_prefill(gapped: GappedSeries, period: int) -> np.ndarray:
    """
    Pré-remplissage par régression, borné à [min, max] des valeurs observées.

    Le modèle est réduit (harmoniques d'abord, puis degré de tendance) tant que
    le système est mal posé ; repli linéaire si aucun modèle ne convient.
    """
    indices = gapped.observed_indices()
    values = gapped.observed_values()
    phases = np.unique(indices % period).size
    degree = int(np.clip(indices.size // 10, 1, MAX_TREND_DEGREE))
    harmonics = min(period // 2, MAX_HARMONICS)

    while harmonics >= 1:
        design = _design_matrix(len(gapped), period, harmonics, degree)
        fourier_terms = design.shape[1] - (degree + 1)
        observed = design[indices]
        if (
            fourier_terms < phases
            and design.shape[1] < indices.size
            and _well_conditioned(observed)
        ):
            coefficients, *_ = np.linalg.lstsq(observed, values, rcond=None)
            prefilled = np.clip(design @ coefficients, values.min(), values.max())
            prefilled[indices] = values
            return prefilled
        if fourier_terms >= phases or degree == 1:
            harmonics -= 1
        else:
            degree -= 1

    logger.debug(
        f"Régression saisonnière mal posée ({indices.size} points, {phases} phases "
        f"observées), pré-remplissage linéaire"
    )
    return linear_fill(gapped)


def centered_moving_average(values: np.ndarray, period: int) -> tuple[np.ndarray, int]:
    """
    Tendance par moyenne mobile centrée (2 x period si la période est paire).

    Returns:
        Tuple (tendance sur les positions définies, décalage h de la première position)
    """
    if period % 2 == 0:
        weights = np.r_[0.5, np.ones(period - 1), 0.5] / period
    else:
        weights = np.ones(period) / period
    return np.convolve(values, weights, mode="valid"), period // 2


def seasonal_component(values: np.ndarray, period: int) -> np.ndarray:
    """Moyennes par phase de la série sans tendance, recentrées sur zéro (longueur period)."""
    trend, offset = centered_moving_average(values, period)
    positions = np.arange(offset, offset + trend.size)
    detrended = values[positions] - trend
    phases = positions % period
    means = np.bincount(phases, weights=detrended, minlength=period) / np.bincount(
        phases, minlength=period
    )
    return means - means.mean()


def seasonal_fill(gapped: GappedSeries) -> np.ndarray:
    period = gapped.period
    if period is None or 2 * period > len(gapped):
        logger.debug(
            f"Pas de période exploitable ({period}) pour {len(gapped)} points, repli linéaire"
        )
        return linear_fill(gapped)

    seasonal = seasonal_component(regression_prefill(gapped, period), period)
    indices = gapped.observed_indices()
    adjusted = gapped.observed_values() - seasonal[indices % period]
    positions = np.arange(len(gapped))
    return np.interp(positions, indices, adjusted) + seasonal[positions % period]


class SeasonalImputer(BaseImputer):
    """Équivalent de na.interp : seule méthode intégrée qui exploite la période."""

    name = "seasonal"

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        return seasonal_fill(gapped)


def impute_seasonal(gapped: GappedSeries) -> ImputationResult:
    return SeasonalImputer().impute(gapped)
