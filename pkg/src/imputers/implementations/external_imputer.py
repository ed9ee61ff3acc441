# src/imputers/implementations/external_imputer.py
"""
Adaptateur de méthode d'imputation externe (protocole stdin/stdout).

Protocole :
- entrée : une ligne d'en-tête `IMPUTE <N> <période|0>` puis N lignes, chacune
  un réel décimal ou le littéral `NA` pour une valeur retirée
- sortie : N lignes de réels décimaux finis, code de sortie 0
- les positions observées doivent être renvoyées à l'identique
"""

import logging
from typing import Any

from src.core.config import DEFAULT_PLUGIN_TIMEOUT
from src.core.exceptions import PluginContractError
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import MISSING, GappedSeries
from src.services.external.plugin_process import parse_output_reals, run_plugin
from src.utils.formatters.number_formatter import format_real

logger: logging.Logger = logging.getLogger(__name__)


def encode_gapped_series(gapped: GappedSeries) -> str:
    lines = [f"IMPUTE {len(gapped)} {gapped.period or 0}"]
    lines.extend("NA" if value is MISSING else format_real(value) for value in gapped.values)
    return "\n".join(lines) + "\n"


class ExternalImputer:
    """Méthode portée par un exécutable externe ; les options deviennent des `--clé=valeur`."""

    def __init__(self, name: str, command: tuple[str, ...], timeout: float = DEFAULT_PLUGIN_TIMEOUT):
        self.name = name
        self.command = tuple(command)
        self.timeout = timeout

    def validate_params(self, params: dict[str, Any]) -> None:
        return None

    def impute(
        self,
        gapped: GappedSeries,
        params: dict[str, Any] | None = None,
        seed: int = 0,
    ) -> ImputationResult:
        arguments = tuple(f"--{key}={value}" for key, value in (params or {}).items())
        stdout = run_plugin(self.command + arguments, encode_gapped_series(gapped), self.timeout)
        values = parse_output_reals(stdout, len(gapped), self.name)

        for index, original in enumerate(gapped.values):
            if original is not MISSING and values[index] != original:
                raise PluginContractError(
                    f"Plugin {self.name} : valeur observée modifiée à l'indice {index} "
                    f"({original!r} -> {values[index]!r})"
                )
        return ImputationResult(values=tuple(values))


def impute_external(
    gapped: GappedSeries, command: tuple[str, ...], timeout: float = DEFAULT_PLUGIN_TIMEOUT
) -> ImputationResult:
    return ExternalImputer(command[0], command, timeout).impute(gapped)
