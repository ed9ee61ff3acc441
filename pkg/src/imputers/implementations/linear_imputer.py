# src/imputers/implementations/linear_imputer.py
from typing import Any

import numpy as np

from src.imputers.base_imputer import BaseImputer
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries


def linear_fill(gapped: GappedSeries) -> np.ndarray:
    """
    Interpolation linéaire entre voisins observés ; les trous de bord prennent
    la valeur observée la plus proche (np.interp prolonge par les extrémités).
    """
    positions = np.arange(len(gapped))
    return np.interp(positions, gapped.observed_indices(), gapped.observed_values())


class LinearImputer(BaseImputer):
    """Équivalent de na.approx."""

    name = "linear"

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        return linear_fill(gapped)


def impute_linear(gapped: GappedSeries) -> ImputationResult:
    return LinearImputer().impute(gapped)
