# src/imputers/implementations/statistic_imputer.py
from typing import Any

import numpy as np

from src.core.exceptions import InvalidParamsError
from src.imputers.base_imputer import BaseImputer
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries

STATISTIC_OPTIONS = ("mean", "median", "mode")


def observed_statistic(values: np.ndarray, option: str) -> float:
    """
    Statistique des valeurs observées.

    Le mode est la valeur exacte la plus fréquente, la plus petite en cas
    d'égalité ; il n'a vraiment de sens que pour des données discrétisées.
    """
    if option == "mean":
        return float(np.mean(values))
    if option == "median":
        return float(np.median(values))
    if option == "mode":
        uniques, counts = np.unique(values, return_counts=True)
        # np.unique trie : argmax renvoie la première (plus petite) valeur ex aequo
        return float(uniques[np.argmax(counts)])
    raise InvalidParamsError(f"Option inconnue : {option!r} (attendu {STATISTIC_OPTIONS})")


class StatisticImputer(BaseImputer):
    """Équivalent de na.mean : option = mean (défaut), median ou mode."""

    name = "statistic"
    accepted_params = frozenset({"option"})

    def check_param_values(self, params: dict[str, Any]) -> None:
        option = params.get("option", "mean")
        if option not in STATISTIC_OPTIONS:
            raise InvalidParamsError(
                f"Option '{option}' invalide pour na.mean (attendu {STATISTIC_OPTIONS})"
            )

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        value = observed_statistic(gapped.observed_values(), params.get("option", "mean"))
        return np.full(len(gapped), value)


def impute_statistic(gapped: GappedSeries, option: str = "mean") -> ImputationResult:
    return StatisticImputer().impute(gapped, {"option": option})
