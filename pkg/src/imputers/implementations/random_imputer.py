# src/imputers/implementations/random_imputer.py
from typing import Any

import numpy as np

from src.core.exceptions import DegenerateRangeError, InvalidParamsError
from src.imputers.base_imputer import BaseImputer, observed_dense
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries


class RandomImputer(BaseImputer):
    """
    Tirage uniforme indépendant dans [min, max] des valeurs observées.

    Sert de référence « naïve » ; l'option `seed` fige le tirage, sinon la
    graine de la cellule du balayage est utilisée.
    """

    name = "random"
    accepted_params = frozenset({"seed"})
    constant_shortcut = False
    empty_error = DegenerateRangeError

    def check_param_values(self, params: dict[str, Any]) -> None:
        if "seed" in params:
            try:
                seed = int(params["seed"])
            except (TypeError, ValueError) as e:
                raise InvalidParamsError(f"Graine invalide : {params['seed']!r}") from e
            if seed < 0:
                raise InvalidParamsError(f"Graine négative : {seed}")

    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        observed = gapped.observed_values()
        low, high = float(observed.min()), float(observed.max())
        if low == high:
            raise DegenerateRangeError(
                f"Plage observée réduite à une valeur ({low}) : tirage aléatoire impossible"
            )
        rng = np.random.default_rng(int(params.get("seed", seed)))
        filled = observed_dense(gapped)
        missing = gapped.missing_indices()
        filled[missing] = rng.uniform(low, high, size=missing.size)
        return filled


def impute_random(gapped: GappedSeries, seed: int) -> ImputationResult:
    return RandomImputer().impute(gapped, seed=seed)
