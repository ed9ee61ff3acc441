# tests/unit/test_services/test_benchmark_service.py
"""
Tests pour benchmark_service : graines, plan apparié, moyennes, parallélisme.
"""

from unittest.mock import patch

import numpy as np
import pytest

from src.core.exceptions import BenchmarkCellError, DegenerateRequestError, UndefinedMetricError
from src.imputers.imputer_registry import dispatch as real_dispatch
from src.models.entities.error_profile_entity import BenchmarkConfig
from src.models.entities.imputer_entity import ImputationResult, Imputer, ImputerKind
from src.models.entities.metric_entity import Metric, MetricKind
from src.models.entities.sample_spec_entity import SamplingScheme, SamplingTemplate
from src.models.entities.time_series_entity import MissingnessMask, TimeSeries
from src.services.external.export_service import profile_to_json
from src.services.processors.benchmark_service import derive_seed, run_benchmark, scored_pair
from src.services.processors.sampler_service import sample_mask
from tests.conftest import plugin_command


def make_config(series: TimeSeries, **overrides) -> BenchmarkConfig:
    kwargs = {
        "series": series,
        "methods": (Imputer(name="na.approx"), Imputer(name="na.locf"), Imputer(name="na.mean")),
        "metric": Metric(name="rmse"),
        "percent_from": 10,
        "percent_to": 50,
        "interval": 20,
        "repetition": 4,
        "master_seed": 42,
    }
    kwargs.update(overrides)
    return BenchmarkConfig(**kwargs)


class TestDeriveSeed:
    """Tests de la dérivation des graines de cellule."""

    def test_deterministic(self):
        assert derive_seed(42, 3, 7) == derive_seed(42, 3, 7)

    def test_distinct_over_grid(self):
        seeds = {derive_seed(42, g, r) for g in range(50) for r in range(50)}
        assert len(seeds) == 2500

    def test_coordinates_are_not_symmetric(self):
        assert derive_seed(0, 1, 2) != derive_seed(0, 2, 1)

    def test_master_seed_matters(self):
        assert derive_seed(1, 0, 0) != derive_seed(2, 0, 0)

    def test_fits_64_bits(self):
        for master in (0, 1, 2**64 - 1):
            assert 0 <= derive_seed(master, 5, 9) < 2**64


class TestScoredPair:
    def test_removed_scope(self, short_series):
        mask = MissingnessMask((1, 4), 10)
        result = ImputationResult(values=tuple(float(i) for i in range(10)))
        truth, imputed = scored_pair(short_series, mask, result, "removed")
        assert truth == [1.0, 5.0]
        assert imputed == [1.0, 4.0]

    def test_full_scope(self, short_series):
        mask = MissingnessMask((1,), 10)
        result = ImputationResult(values=short_series.values)
        truth, imputed = scored_pair(short_series, mask, result, "full")
        assert truth == list(short_series.values)
        assert imputed == list(short_series.values)


class TestRunBenchmark:
    """Tests du balayage complet."""

    def test_profile_shape(self, nottem):
        profile = run_benchmark(make_config(nottem))

        assert profile.parameter == "rmse"
        assert profile.missing_percent == (10.0, 30.0, 50.0)
        assert profile.methods == ("na.approx", "na.locf", "na.mean")
        assert profile.repetition == 4
        for name in profile.methods:
            assert len(profile.errall[name]) == 3
            assert all(len(row) == 4 for row in profile.errall[name])

    def test_means_are_row_averages(self, nottem):
        profile = run_benchmark(make_config(nottem))
        for name in profile.methods:
            for g, row in enumerate(profile.errall[name]):
                assert profile.means[name][g] == pytest.approx(float(np.mean(row)), rel=1e-12)

    def test_seeds_are_derived_per_cell(self, nottem):
        profile = run_benchmark(make_config(nottem))
        assert profile.seeds[1][2] == derive_seed(42, 1, 2)

    def test_masks_are_shared_across_methods(self, nottem):
        """Test du plan apparié : toutes les méthodes reçoivent la même série à trous."""
        def recording_dispatch(imputer, gapped, seed=0, timeout=30.0):
            key = tuple(gapped.missing_indices().tolist())
            calls.append((imputer.name, key))
            return real_dispatch(imputer, gapped, seed=seed, timeout=timeout)

        calls: list[tuple[str, tuple]] = []
        cfg = make_config(nottem, repetition=2)
        with patch(
            "src.services.processors.benchmark_service.dispatch", side_effect=recording_dispatch
        ):
            run_benchmark(cfg)

        methods = len(cfg.methods)
        assert len(calls) == 3 * 2 * methods
        for start in range(0, len(calls), methods):
            cell = calls[start : start + methods]
            assert [name for name, _ in cell] == ["na.approx", "na.locf", "na.mean"]
            assert len({key for _, key in cell}) == 1

    def test_cell_mask_matches_sampler(self, nottem):
        """Test que le masque d'une cellule est celui tiré avec la graine dérivée."""
        cfg = make_config(nottem, methods=(Imputer(name="na.locf"),), repetition=1)
        masks: list[tuple[int, ...]] = []

        def recording_dispatch(imputer, gapped, seed=0, timeout=30.0):
            masks.append(tuple(gapped.missing_indices().tolist()))
            return real_dispatch(imputer, gapped, seed=seed, timeout=timeout)

        with patch(
            "src.services.processors.benchmark_service.dispatch", side_effect=recording_dispatch
        ):
            run_benchmark(cfg)

        for g, percent in enumerate(cfg.grid):
            spec = cfg.template.with_percent(percent, derive_seed(42, g, 0))
            assert masks[g] == sample_mask(spec, len(nottem)).removed

    def test_jobs_do_not_change_the_result(self, nottem):
        """Test de l'indépendance vis-à-vis du nombre de workers (JSON identique)."""
        cfg = make_config(nottem, methods=(*make_config(nottem).methods, Imputer(name="na.random")))
        sequential = profile_to_json(run_benchmark(cfg, jobs=1))
        parallel = profile_to_json(run_benchmark(cfg, jobs=8))
        assert sequential == parallel

    def test_mar_scheme(self, nottem):
        cfg = make_config(
            nottem, template=SamplingTemplate(SamplingScheme.MAR, block=6, block_is_percent=False)
        )
        profile = run_benchmark(cfg)
        assert all(e >= 0 for row in profile.errall["na.approx"] for e in row)

    def test_external_locf_equivalence(self):
        """Test qu'un plugin LOCF donne exactement les erreurs de la méthode intégrée."""
        series = TimeSeries(values=tuple(np.sin(np.arange(40) / 3.0).tolist()))
        builtin = run_benchmark(make_config(series, methods=(Imputer(name="na.locf"),)))
        external = run_benchmark(
            make_config(
                series,
                methods=(
                    Imputer(
                        name="na.locf",
                        kind=ImputerKind.EXTERNAL,
                        command=plugin_command("locf_plugin.py"),
                    ),
                ),
            )
        )
        np.testing.assert_allclose(
            external.errall["na.locf"], builtin.errall["na.locf"], rtol=0, atol=1e-12
        )


class TestCellErrors:
    """Tests de la remontée des erreurs de cellule."""

    def test_degenerate_sampling_is_wrapped(self):
        series = TimeSeries(values=tuple(float(i) for i in range(20)))
        cfg = make_config(series, percent_from=1, percent_to=1, interval=1)
        with pytest.raises(BenchmarkCellError) as info:
            run_benchmark(cfg)
        assert isinstance(info.value.cause, DegenerateRequestError)
        assert info.value.exit_code == 2
        assert info.value.grid_index == 0

    def test_undefined_metric_reports_method(self, nottem):
        """Test que la PCV d'une imputation constante désigne la méthode fautive."""
        cfg = make_config(nottem, metric=Metric(name="pcv"))
        with pytest.raises(BenchmarkCellError) as info:
            run_benchmark(cfg)
        assert info.value.method == "na.mean"
        assert isinstance(info.value.cause, UndefinedMetricError)

    def test_plugin_error_keeps_exit_code_3(self, short_series):
        bad = Imputer(name="bad", kind=ImputerKind.EXTERNAL, command=plugin_command("echo_zero_plugin.py"))
        with pytest.raises(BenchmarkCellError) as info:
            run_benchmark(make_config(short_series, methods=(bad,), percent_from=30, percent_to=30))
        assert info.value.exit_code == 3

    def test_non_finite_external_metric(self, short_series):
        metric = Metric(name="inf", kind=MetricKind.EXTERNAL, command=plugin_command("inf_metric_plugin.py"))
        with pytest.raises(BenchmarkCellError) as info:
            run_benchmark(make_config(short_series, metric=metric, percent_from=30, percent_to=30))
        assert info.value.exit_code == 3
