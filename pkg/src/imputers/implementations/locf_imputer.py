# src/imputers/implementations/locf_imputer.py
from typing import Any

import numpy as np

from src.imputers.base_imputer import BaseImputer, observed_dense
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries


def locf_fill(gapped: GappedSeries) -> np.ndarray:
    """
    Dernière observation reportée ; les trous de tête reprennent la première
    observation (report arrière).
    """
    observed = gapped.observed_mask
    source = np.where(observed, np.arange(len(gapped)), -1)
    source = np.maximum.accumulate(source)
    source[source < 0] = np.argmax(observed)
    return observed_dense(gapped)[source]


class LocfImputer(BaseImputer):
    """Équivalent de na.locf."""

    name = "locf"

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        return locf_fill(gapped)


def impute_locf(gapped: GappedSeries) -> ImputationResult:
    return LocfImputer().impute(gapped)
