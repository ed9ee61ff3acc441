# src/metrics/external_metric.py
"""
Métrique externe : l'enfant reçoit `METRIC <n>` puis n lignes `vrai imputé`
et doit écrire exactement un réel fini.
"""

from collections.abc import Sequence

from src.core.config import DEFAULT_PLUGIN_TIMEOUT
from src.core.exceptions import MetricError
from src.services.external.plugin_process import parse_output_reals, run_plugin
from src.utils.formatters.number_formatter import format_real


def encode_metric_input(truth: Sequence[float], imputed: Sequence[float]) -> str:
    if len(truth) != len(imputed):
        raise MetricError(f"Longueurs différentes : {len(truth)} contre {len(imputed)}")
    lines = [f"METRIC {len(truth)}"]
    lines.extend(f"{format_real(t)} {format_real(i)}" for t, i in zip(truth, imputed, strict=True))
    return "\n".join(lines) + "\n"


def metric_external(
    truth: Sequence[float],
    imputed: Sequence[float],
    command: tuple[str, ...],
    timeout: float = DEFAULT_PLUGIN_TIMEOUT,
) -> float:
    stdout = run_plugin(tuple(command), encode_metric_input(truth, imputed), timeout)
    return parse_output_reals(stdout, 1, command[0])[0]
