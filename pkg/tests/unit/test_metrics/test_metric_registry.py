# tests/unit/test_metrics/test_metric_registry.py
"""
Tests pour MetricRegistry, evaluate_metric et les métriques externes.
"""

import numpy as np
import pytest

from src.core.exceptions import (
    ConfigurationError,
    MetricError,
    PluginContractError,
    UnknownMetricError,
)
from src.metrics.error_functions import rmse
from src.metrics.external_metric import encode_metric_input, metric_external
from src.metrics.metric_registry import MetricRegistry, evaluate_metric
from src.models.entities.metric_entity import Metric, MetricKind
from tests.conftest import plugin_command

TRUTH = [13067.3, 13130.5, 13198.4, 13254.2]
IMPUTED = [13060.0, 13140.0, 13198.4, 13250.0]


class TestMetricRegistry:
    def test_builtins_are_available(self):
        registry = MetricRegistry()
        for name in ("rmse", "mae", "mape", "pcv"):
            assert registry.get(name).kind is MetricKind.BUILT_IN

    def test_unknown_metric(self):
        with pytest.raises(UnknownMetricError):
            MetricRegistry().get("smape")

    def test_register_external(self):
        registry = MetricRegistry()
        metric = registry.register_external("ext_rmse", ("python3", "m.py"))
        assert registry.get("ext_rmse") == metric
        assert metric.command == ("python3", "m.py")

    def test_external_cannot_shadow_builtin(self):
        with pytest.raises(ConfigurationError):
            MetricRegistry().register_external("rmse", ("x",))


class TestEvaluateMetric:
    def test_builtin(self):
        assert evaluate_metric(Metric(name="rmse"), TRUTH, IMPUTED) == rmse(TRUTH, IMPUTED)

    def test_unknown_builtin(self):
        with pytest.raises(UnknownMetricError):
            evaluate_metric(Metric(name="nope"), TRUTH, IMPUTED)

    def test_external_rmse_matches_builtin(self):
        """Test qu'un plugin RMSE reproduit la métrique intégrée à 1e-12."""
        metric = Metric(
            name="ext", kind=MetricKind.EXTERNAL, command=plugin_command("rmse_metric_plugin.py")
        )
        assert evaluate_metric(metric, TRUTH, IMPUTED) == pytest.approx(
            rmse(TRUTH, IMPUTED), rel=1e-12
        )

    @pytest.mark.slow
    def test_external_rmse_matches_builtin_on_random_pairs(self):
        """Test sur 100 paires aléatoires de longueurs variées."""
        metric = Metric(
            name="ext", kind=MetricKind.EXTERNAL, command=plugin_command("rmse_metric_plugin.py")
        )
        rng = np.random.default_rng(99)
        for _ in range(100):
            size = int(rng.integers(1, 60))
            truth = rng.normal(100.0, 25.0, size=size).tolist()
            imputed = (np.array(truth) + rng.normal(0.0, 5.0, size=size)).tolist()
            assert evaluate_metric(metric, truth, imputed) == pytest.approx(
                rmse(truth, imputed), rel=1e-12
            )


class TestExternalMetric:
    def test_encode_metric_input(self):
        assert encode_metric_input([1.0, 2.5], [1.5, -0.0]) == "METRIC 2\n1 1.5\n2.5 0\n"

    def test_encode_length_mismatch(self):
        with pytest.raises(MetricError):
            encode_metric_input([1.0], [1.0, 2.0])

    @pytest.mark.parametrize(
        "script",
        ["two_numbers_metric_plugin.py", "inf_metric_plugin.py", "failing_plugin.py"],
    )
    def test_contract_violations(self, script):
        """Test des sorties refusées : deux réels, valeur infinie, code non nul."""
        with pytest.raises(PluginContractError):
            metric_external(TRUTH, IMPUTED, plugin_command(script))
