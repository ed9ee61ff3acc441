# src/metrics/metric_registry.py
import logging
from collections.abc import Sequence

from src.core.config import DEFAULT_PLUGIN_TIMEOUT
from src.core.exceptions import ConfigurationError, UnknownMetricError
from src.metrics.error_functions import BUILT_IN_METRICS
from src.metrics.external_metric import metric_external
from src.models.entities.metric_entity import Metric, MetricKind

logger: logging.Logger = logging.getLogger(__name__)


class MetricRegistry:
    """Métriques connues : les quatre intégrées plus les plugins déclarés."""

    def __init__(self, timeout: float = DEFAULT_PLUGIN_TIMEOUT):
        self.timeout = timeout
        self._metrics: dict[str, Metric] = {name: Metric(name=name) for name in BUILT_IN_METRICS}

    def register_external(self, name: str, command: tuple[str, ...]) -> Metric:
        if name in self._metrics:
            raise ConfigurationError(f"Métrique déjà enregistrée : {name}")
        metric = Metric(name=name, kind=MetricKind.EXTERNAL, command=tuple(command))
        self._metrics[name] = metric
        logger.info(f"Métrique externe enregistrée : {name} -> {' '.join(command)}")
        return metric

    def get(self, name: str) -> Metric:
        try:
            return self._metrics[name]
        except KeyError as e:
            raise UnknownMetricError(
                f"Métrique inconnue : {name!r} (disponibles : {sorted(self._metrics)})"
            ) from e


def evaluate_metric(
    metric: Metric,
    truth: Sequence[float],
    imputed: Sequence[float],
    timeout: float = DEFAULT_PLUGIN_TIMEOUT,
) -> float:
    """Calcule la métrique sur la paire (vrai, imputé)."""
    if metric.kind is MetricKind.EXTERNAL:
        return metric_external(truth, imputed, metric.command, timeout)
    function = BUILT_IN_METRICS.get(metric.name)
    if function is None:
        raise UnknownMetricError(f"Métrique inconnue : {metric.name!r}")
    return function(truth, imputed)
