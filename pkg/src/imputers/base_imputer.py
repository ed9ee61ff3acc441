# src/imputers/base_imputer.py
import logging
from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from src.core.exceptions import ImputationError, InvalidParamsError, UnimputableError
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import GappedSeries

logger: logging.Logger = logging.getLogger(__name__)


def observed_dense(gapped: GappedSeries) -> np.ndarray:
    """Tableau de longueur N : valeurs observées en place, zéros aux trous."""
    dense = np.zeros(len(gapped), dtype=float)
    dense[gapped.observed_indices()] = gapped.observed_values()
    return dense


class BaseImputer(ABC):
    """
    Contrat commun des méthodes intégrées.

    `impute` gère les cas communs (série déjà complète, aucune observation,
    observations toutes égales) puis délègue le remplissage à `fill` ; la
    fidélité aux positions observées est rétablie à l'identique en sortie.
    """

    name: str = "base"
    accepted_params: frozenset[str] = frozenset()
    constant_shortcut: bool = True
    empty_error: type[ImputationError] = UnimputableError

    # ============================================================================
    # 🔶 Contrat à implémenter dans les classes concrètes
    # ============================================================================

    @abstractmethod
    def fill(self, gapped: GappedSeries, params: dict[str, Any], seed: int) -> np.ndarray:
        """Renvoie un tableau de longueur N sans trou (positions observées comprises)."""
        pass

    def check_param_values(self, params: dict[str, Any]) -> None:
        """Validation des valeurs d'options ; aucune contrainte par défaut."""
        return None

    # ============================================================================
    # 🧰 Pipeline commun
    # ============================================================================

    def validate_params(self, params: dict[str, Any]) -> None:
        unknown = sorted(set(params) - self.accepted_params)
        if unknown:
            raise InvalidParamsError(
                f"Options inconnues pour '{self.name}' : {unknown} "
                f"(acceptées : {sorted(self.accepted_params) or 'aucune'})"
            )
        self.check_param_values(params)

    def impute(
        self,
        gapped: GappedSeries,
        params: dict[str, Any] | None = None,
        seed: int = 0,
    ) -> ImputationResult:
        params = params or {}
        self.validate_params(params)

        if gapped.is_complete():
            return ImputationResult(values=tuple(float(v) for v in gapped.values))

        observed = gapped.observed_values()
        if observed.size == 0:
            raise self.empty_error(f"'{self.name}' : aucune valeur observée à partir de laquelle imputer")

        if self.constant_shortcut and np.all(observed == observed[0]):
            filled = np.full(len(gapped), observed[0])
        else:
            filled = np.asarray(self.fill(gapped, params, seed), dtype=float)

        return self._finalize(gapped, filled)

    def _finalize(self, gapped: GappedSeries, filled: np.ndarray) -> ImputationResult:
        if filled.shape != (len(gapped),):
            raise ImputationError(
                f"'{self.name}' a produit {filled.size} valeurs pour une série de {len(gapped)}"
            )
        filled = filled.copy()
        filled[gapped.observed_indices()] = gapped.observed_values()
        if not np.all(np.isfinite(filled)):
            raise ImputationError(f"'{self.name}' a produit des valeurs non finies")
        return ImputationResult(values=tuple(filled.tolist()))
