# tests/unit/test_services/test_statistics_service.py
"""
Tests pour StatisticsService (statistiques de boîtes à moustaches).
"""

import numpy as np
import pytest

from src.core.exceptions import ConfigurationError
from src.services.processors.statistics_service import StatisticsService, box_statistics


def quantile_type7(values, q):
    """Quantile par interpolation linéaire entre statistiques d'ordre, codé à la main."""
    ordered = sorted(values)
    position = (len(ordered) - 1) * q
    below = int(np.floor(position))
    above = min(below + 1, len(ordered) - 1)
    return ordered[below] + (position - below) * (ordered[above] - ordered[below])


class TestBoxStatistics:
    """Tests des quartiles et moustaches."""

    def test_simple_box_with_outlier(self):
        stats = box_statistics([1, 2, 3, 4, 100])

        assert stats.q1 == 2.0
        assert stats.median == 3.0
        assert stats.q3 == 4.0
        assert stats.iqr == 2.0
        assert stats.whisker_low == 1.0
        assert stats.whisker_high == 4.0
        assert stats.outliers == (100.0,)
        assert stats.inliers == (1.0, 2.0, 3.0, 4.0)

    def test_against_independent_quantile_oracle(self):
        """Test des quartiles contre un oracle indépendant (1e-12)."""
        rng = np.random.default_rng(3)
        for _ in range(500):
            values = rng.lognormal(0.0, 1.0, size=int(rng.integers(1, 40))).tolist()
            stats = box_statistics(values)
            for q, got in ((0.25, stats.q1), (0.5, stats.median), (0.75, stats.q3)):
                assert got == pytest.approx(quantile_type7(values, q), rel=1e-12, abs=1e-12)

            low_fence = stats.q1 - 1.5 * stats.iqr
            high_fence = stats.q3 + 1.5 * stats.iqr
            inside = [v for v in values if low_fence <= v <= high_fence]
            assert stats.whisker_low == min(inside)
            assert stats.whisker_high == max(inside)
            assert len(stats.inliers) + len(stats.outliers) == len(values)

    def test_single_value(self):
        stats = box_statistics([2.5])
        assert stats.q1 == stats.median == stats.q3 == 2.5
        assert stats.outliers == ()

    def test_empty_values(self):
        with pytest.raises(ConfigurationError):
            box_statistics([])


class TestStatisticsService:
    def test_initialization(self):
        """Test d'initialisation du service."""
        service = StatisticsService()
        assert service is not None

    def test_box_statistics_for_profile(self, small_profile):
        boxes = StatisticsService().box_statistics_for_profile(small_profile)
        assert list(boxes) == ["na.approx", "na.mean"]
        assert len(boxes["na.approx"]) == 3
        assert boxes["na.approx"][2].outliers == (9.0,)

    def test_value_range(self, small_profile):
        service = StatisticsService()
        assert service.value_range(small_profile, use_raw=True) == (0.9, 16.0)
        assert service.value_range(small_profile, use_raw=False) == pytest.approx((1.04, 15.0))
