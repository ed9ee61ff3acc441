# tests/conftest.py
"""
Configuration pytest et fixtures partagées.
"""

import shlex
import sys
from pathlib import Path

import numpy as np
import pytest

from src.collectors.implementations.builtin_dataset_collector import load_builtin_dataset
from src.models.entities.error_profile_entity import ErrorProfile
from src.models.entities.time_series_entity import MISSING, GappedSeries, TimeSeries

PLUGINS_DIR = Path(__file__).resolve().parent / "fixtures" / "plugins"


def plugin_command(script: str) -> tuple[str, ...]:
    """Commande d'un plugin de test, lancé avec l'interpréteur courant."""
    return (sys.executable, str(PLUGINS_DIR / script))


def plugin_command_text(script: str) -> str:
    """Même commande, sous forme de texte pour --external-method NAME=CMD."""
    return " ".join(shlex.quote(part) for part in plugin_command(script))


def random_gapped(rng: np.random.Generator, length: int, missing: int) -> GappedSeries:
    """Série aléatoire de longueur `length` avec `missing` trous (au moins une observation)."""
    values = rng.normal(10.0, 3.0, size=length)
    holes = set(rng.choice(length, size=missing, replace=False).tolist())
    return GappedSeries(
        values=tuple(MISSING if i in holes else float(v) for i, v in enumerate(values))
    )


@pytest.fixture
def short_series() -> TimeSeries:
    """Série courte et non monotone."""
    return TimeSeries(values=(3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0, 5.0, 3.0), label="pi")


@pytest.fixture
def linear_series() -> TimeSeries:
    """Série affine 2t + 1, t = 0..49."""
    return TimeSeries(values=tuple(2.0 * t + 1.0 for t in range(50)), label="affine")


@pytest.fixture
def seasonal_series() -> TimeSeries:
    """Sinusoïde de période 12 sur 10 cycles, avec tendance légère."""
    t = np.arange(120)
    values = 50 + 0.05 * t + 10 * np.sin(2 * np.pi * t / 12)
    return TimeSeries(values=tuple(values.tolist()), period=12, label="sinus")


@pytest.fixture
def gapped_short() -> GappedSeries:
    """Trous en tête, au milieu et en queue."""
    return GappedSeries(values=(MISSING, 2.0, MISSING, MISSING, 8.0, 10.0, MISSING))


@pytest.fixture
def nottem() -> TimeSeries:
    return load_builtin_dataset("nottem")


@pytest.fixture
def austres() -> TimeSeries:
    return load_builtin_dataset("austres")


@pytest.fixture
def single_cell_profile() -> ErrorProfile:
    """Profil minimal : une méthode, un pourcentage, une répétition."""
    return ErrorProfile(
        parameter="rmse",
        missing_percent=(10.0,),
        methods=("na.mean",),
        means={"na.mean": (2.5,)},
        errall={"na.mean": ((2.5,),)},
        seeds=((7,),),
    )


@pytest.fixture
def small_profile() -> ErrorProfile:
    """Profil à deux méthodes, trois pourcentages, cinq répétitions."""
    errall = {
        "na.approx": (
            (1.0, 1.2, 0.9, 1.1, 1.0),
            (2.0, 2.2, 1.8, 2.1, 2.4),
            (3.0, 3.5, 2.9, 3.1, 9.0),
        ),
        "na.mean": (
            (10.0, 11.0, 9.0, 10.5, 9.5),
            (12.0, 13.0, 11.0, 12.5, 11.5),
            (15.0, 16.0, 14.0, 15.5, 14.5),
        ),
    }
    return ErrorProfile(
        parameter="rmse",
        missing_percent=(10.0, 50.0, 90.0),
        methods=("na.approx", "na.mean"),
        means={name: tuple(float(np.mean(row)) for row in rows) for name, rows in errall.items()},
        errall=errall,
        seeds=tuple(tuple(100 * g + r for r in range(5)) for g in range(3)),
    )


@pytest.fixture
def csv_file(tmp_path) -> str:
    """CSV avec en-tête : une colonne de dates, une colonne de valeurs."""
    path = tmp_path / "serie.csv"
    path.write_text("date,value\n2020-01,1.5\n2020-02,2.5\n2020-03,3.5\n2020-04,4.5\n")
    return str(path)
