# src/imputers/implementations/interpolation_imputer.py
from typing import Any

import numpy as np

from src.core.exceptions import InvalidParamsError
from src.imputers.base_imputer import BaseImputer
from src.imputers.implementations.linear_imputer import linear_fill
from src.imputers.implementations.spline_imputer import spline_fill
from src.models.entities.time_series_entity import GappedSeries

INTERPOLATION_OPTIONS = ("linear", "spline")


class InterpolationImputer(BaseImputer):
    """Équivalent de na.interpolation : option = linear (défaut) ou spline."""

    name = "interpolation"
    accepted_params = frozenset({"option"})

    def check_param_values(self, params: dict[str, Any]) -> None:
        option = params.get("option", "linear")
        if option not in INTERPOLATION_OPTIONS:
            raise InvalidParamsError(
                f"Option '{option}' invalide pour na.interpolation (attendu {INTERPOLATION_OPTIONS})"
            )

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        if params.get("option", "linear") == "spline":
            return spline_fill(gapped)
        return linear_fill(gapped)
