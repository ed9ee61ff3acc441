# src/imputers/implementations/spline_imputer.py
import logging
from typing import Any

import numpy as np
from scipy.interpolate import CubicSpline

from src.imputers.base_imputer import BaseImputer
from src.imputers.implementations.linear_imputer import linear_fill
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries

logger: logging.Logger = logging.getLogger(__name__)

MIN_SPLINE_POINTS = 4


def spline_fill(gapped: GappedSeries) -> np.ndarray:
    """
    Spline cubique passant par tous les points observés.

    Conditions « not-a-knot » : un polynôme de degré 3 est reproduit exactement.
    Les trous de bord gardent l'extension par la valeur la plus proche ; en dessous
    de 4 points observés la spline est sous-déterminée et on repasse en linéaire.
    """
    indices = gapped.observed_indices()
    if indices.size < MIN_SPLINE_POINTS:
        logger.debug(f"Spline : {indices.size} point(s) observé(s), repli sur l'interpolation linéaire")
        return linear_fill(gapped)

    filled = linear_fill(gapped)
    positions = np.arange(len(gapped))
    interior = (positions > indices[0]) & (positions < indices[-1])
    spline = CubicSpline(indices, gapped.observed_values(), bc_type="not-a-knot")
    filled[interior] = spline(positions[interior])
    return filled


class SplineImputer(BaseImputer):
    name = "spline"

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        return spline_fill(gapped)


def impute_spline(gapped: GappedSeries) -> ImputationResult:
    return SplineImputer().impute(gapped)
