# tests/unit/test_models/test_config_entities.py
"""
Tests pour SampleSpec, SamplingTemplate, BenchmarkConfig, ErrorProfile et PlotSpec.
"""

import pytest

from src.core.exceptions import ConfigurationError
from src.models.entities.error_profile_entity import BenchmarkConfig, ErrorProfile
from src.models.entities.imputer_entity import Imputer
from src.models.entities.metric_entity import Metric
from src.models.entities.plot_spec_entity import PlotSpec
from src.models.entities.sample_spec_entity import SampleSpec, SamplingScheme, SamplingTemplate
from src.models.entities.time_series_entity import TimeSeries


class TestSamplingScheme:
    def test_from_name_is_case_insensitive(self):
        assert SamplingScheme.from_name("MAR") is SamplingScheme.MAR
        assert SamplingScheme.from_name("mcar") is SamplingScheme.MCAR

    def test_unknown_scheme(self):
        with pytest.raises(ConfigurationError):
            SamplingScheme.from_name("mnar")


class TestSampleSpec:
    """Tests de validation d'une spécification de tirage."""

    @pytest.mark.parametrize("percent", [0, 100, -5, 150])
    def test_percent_out_of_range(self, percent):
        """Test que b doit être dans ]0, 100[."""
        with pytest.raises(ConfigurationError):
            SampleSpec(scheme=SamplingScheme.MCAR, percent_missing=percent)

    def test_block_percent_over_100(self):
        """Test d'un bloc en pourcentage supérieur à 100."""
        with pytest.raises(ConfigurationError):
            SampleSpec(scheme=SamplingScheme.MAR, percent_missing=10, block=120)

    def test_block_count_over_100_is_valid(self):
        """Test qu'un bloc en nombre d'observations peut dépasser 100."""
        spec = SampleSpec(
            scheme=SamplingScheme.MAR, percent_missing=10, block=120, block_is_percent=False
        )
        assert spec.block == 120

    def test_block_count_must_be_integer(self):
        with pytest.raises(ConfigurationError):
            SamplingTemplate(SamplingScheme.MAR, block=2.5, block_is_percent=False)

    def test_block_must_be_positive(self):
        with pytest.raises(ConfigurationError):
            SamplingTemplate(SamplingScheme.MAR, block=0)

    def test_seed_must_fit_64_bits(self):
        with pytest.raises(ConfigurationError):
            SampleSpec(scheme=SamplingScheme.MCAR, percent_missing=10, seed=2**64)

    def test_template_with_percent(self):
        """Test que le modèle transmet schéma et bloc au tirage."""
        template = SamplingTemplate(SamplingScheme.MAR, block=3, block_is_percent=False)
        spec = template.with_percent(20.0, seed=9)
        assert spec.scheme is SamplingScheme.MAR
        assert spec.block == 3
        assert spec.block_is_percent is False
        assert spec.seed == 9
        assert spec.template == template


class TestBenchmarkConfig:
    """Tests de la configuration de balayage."""

    @pytest.fixture
    def base_kwargs(self):
        return {
            "series": TimeSeries(values=tuple(range(1, 21))),
            "methods": (Imputer(name="na.approx"),),
            "metric": Metric(name="rmse"),
        }

    def test_default_grid(self, base_kwargs):
        """Test de la grille par défaut 10, 20, ..., 90."""
        cfg = BenchmarkConfig(**base_kwargs)
        assert cfg.grid == (10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0)

    def test_grid_stops_before_upper_bound(self, base_kwargs):
        """Test d'un pas qui ne tombe pas sur la borne supérieure."""
        cfg = BenchmarkConfig(**base_kwargs, percent_from=10, percent_to=45, interval=15)
        assert cfg.grid == (10.0, 25.0, 40.0)

    def test_single_point_grid(self, base_kwargs):
        cfg = BenchmarkConfig(**base_kwargs, percent_from=30, percent_to=30)
        assert cfg.grid == (30.0,)

    def test_fractional_interval_has_no_float_drift(self, base_kwargs):
        """Test que 0.1 + 0.2 ne produit pas 0.30000000000000004."""
        cfg = BenchmarkConfig(**base_kwargs, percent_from=0.1, percent_to=0.3, interval=0.1)
        assert cfg.grid == (0.1, 0.2, 0.3)

    @pytest.mark.parametrize(
        "overrides",
        [
            {"percent_from": 0},
            {"percent_from": 50, "percent_to": 40},
            {"percent_to": 100},
            {"interval": 0},
            {"repetition": 0},
            {"methods": ()},
            {"score_on": "observed"},
            {"master_seed": -1},
        ],
    )
    def test_invalid_configurations(self, base_kwargs, overrides):
        """Test des configurations refusées."""
        with pytest.raises(ConfigurationError):
            BenchmarkConfig(**{**base_kwargs, **overrides})

    def test_duplicate_method_names(self, base_kwargs):
        base_kwargs["methods"] = (Imputer(name="na.approx"), Imputer(name="na.approx"))
        with pytest.raises(ConfigurationError, match="dupliqués"):
            BenchmarkConfig(**base_kwargs)


class TestErrorProfile:
    """Tests de cohérence du profil d'erreur."""

    def test_repetition(self, small_profile):
        assert small_profile.repetition == 5

    def test_missing_method_is_rejected(self):
        with pytest.raises(ConfigurationError):
            ErrorProfile(
                parameter="rmse",
                missing_percent=(10.0,),
                methods=("a", "b"),
                means={"a": (1.0,)},
                errall={"a": ((1.0,),)},
                seeds=((1,),),
            )

    def test_ragged_errall_is_rejected(self):
        with pytest.raises(ConfigurationError):
            ErrorProfile(
                parameter="rmse",
                missing_percent=(10.0, 20.0),
                methods=("a",),
                means={"a": (1.0, 2.0)},
                errall={"a": ((1.0, 1.0), (2.0,))},
                seeds=((1, 2), (3, 4)),
            )

    def test_non_finite_error_is_rejected(self):
        with pytest.raises(ConfigurationError):
            ErrorProfile(
                parameter="rmse",
                missing_percent=(10.0,),
                methods=("a",),
                means={"a": (float("nan"),)},
                errall={"a": ((float("nan"),),)},
                seeds=((1,),),
            )


class TestPlotSpec:
    def test_invalid_dimensions(self):
        with pytest.raises(ConfigurationError):
            PlotSpec(width=0)
