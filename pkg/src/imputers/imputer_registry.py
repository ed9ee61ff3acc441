# src/imputers/imputer_registry.py
"""
Registre des méthodes d'imputation et routage vers leur implémentation.

Responsabilité :
- Associer les noms publics (na.approx, na.interp, ...) aux implémentations intégrées
- Valider les options (addl_arg) dès l'enregistrement
- Enregistrer les plugins externes
- Router un appel d'imputation (dispatch)
"""

import logging
from typing import Any

from src.core.config import DEFAULT_PLUGIN_TIMEOUT
from src.core.exceptions import ConfigurationError, UnknownMethodError
from src.imputers.base_imputer import BaseImputer
from src.imputers.implementations.external_imputer import ExternalImputer
from src.imputers.implementations.interpolation_imputer import InterpolationImputer
from src.imputers.implementations.linear_imputer import LinearImputer
from src.imputers.implementations.locf_imputer import LocfImputer
from src.imputers.implementations.random_imputer import RandomImputer
from src.imputers.implementations.seasonal_imputer import SeasonalImputer
from src.imputers.implementations.statistic_imputer import StatisticImputer
from src.models.entities.imputer_entity import ImputationResult, Imputer, ImputerKind
from src.models.entities.time_series_entity import GappedSeries

logger: logging.Logger = logging.getLogger(__name__)

BUILT_IN_IMPUTERS: dict[str, BaseImputer] = {
    "na.approx": LinearImputer(),
    "na.interp": SeasonalImputer(),
    "na.interpolation": InterpolationImputer(),
    "na.locf": LocfImputer(),
    "na.mean": StatisticImputer(),
    "na.random": RandomImputer(),
}


class ImputerRegistry:
    """Méthodes disponibles pour un balayage, dans l'ordre d'enregistrement."""

    def __init__(self, timeout: float = DEFAULT_PLUGIN_TIMEOUT):
        self.timeout = timeout
        self._imputers: dict[str, Imputer] = {}

    def _ensure_unique(self, name: str) -> None:
        if name in self._imputers:
            raise ConfigurationError(f"Méthode déjà enregistrée : {name}")

    def register_builtin(self, name: str, params: dict[str, Any] | None = None) -> Imputer:
        implementation = BUILT_IN_IMPUTERS.get(name)
        if implementation is None:
            raise UnknownMethodError(
                f"Méthode inconnue : {name!r} (intégrées : {sorted(BUILT_IN_IMPUTERS)})"
            )
        self._ensure_unique(name)
        params = dict(params or {})
        implementation.validate_params(params)
        imputer = Imputer(name=name, params=params, kind=ImputerKind.BUILT_IN)
        self._imputers[name] = imputer
        logger.debug(f"Méthode intégrée enregistrée : {name} {params or ''}")
        return imputer

    def register_external(
        self, name: str, command: tuple[str, ...], params: dict[str, Any] | None = None
    ) -> Imputer:
        self._ensure_unique(name)
        imputer = Imputer(
            name=name, params=dict(params or {}), kind=ImputerKind.EXTERNAL, command=tuple(command)
        )
        self._imputers[name] = imputer
        logger.info(f"Méthode externe enregistrée : {name} -> {' '.join(command)}")
        return imputer

    def get(self, name: str) -> Imputer:
        try:
            return self._imputers[name]
        except KeyError as e:
            raise UnknownMethodError(f"Méthode non enregistrée : {name!r}") from e

    def all(self) -> list[Imputer]:
        return list(self._imputers.values())

    def dispatch(self, imputer: Imputer, gapped: GappedSeries, seed: int = 0) -> ImputationResult:
        return dispatch(imputer, gapped, seed=seed, timeout=self.timeout)


def dispatch(
    imputer: Imputer,
    gapped: GappedSeries,
    seed: int = 0,
    timeout: float = DEFAULT_PLUGIN_TIMEOUT,
) -> ImputationResult:
    """
    Route l'imputation vers l'implémentation intégrée ou le plugin externe.

    Args:
        imputer: Méthode nommée et ses options
        gapped: Série à trous
        seed: Graine utilisée par les méthodes aléatoires sans graine explicite
        timeout: Délai maximal d'un plugin externe, en secondes

    Raises:
        UnknownMethodError: Nom intégré inconnu
        InvalidParamsError: Options refusées par la méthode
    """
    if imputer.kind is ImputerKind.EXTERNAL:
        return ExternalImputer(imputer.name, imputer.command, timeout).impute(
            gapped, imputer.params, seed
        )
    implementation = BUILT_IN_IMPUTERS.get(imputer.name)
    if implementation is None:
        raise UnknownMethodError(f"Méthode inconnue : {imputer.name!r}")
    return implementation.impute(gapped, imputer.params, seed)
