# src/models/entities/metric_entity.py

from dataclasses import dataclass
from enum import Enum


class MetricKind(Enum):
    BUILT_IN = "built_in"
    EXTERNAL = "external"


@dataclass(frozen=True)
class Metric:
    """Métrique d'erreur nommée (rmse, mae, mape, pcv ou plugin externe)."""

    name: str
    kind: MetricKind = MetricKind.BUILT_IN
    command: tuple[str, ...] = ()
