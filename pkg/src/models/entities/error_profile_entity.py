# src/models/entities/error_profile_entity.py

import math
from dataclasses import dataclass

from src.core.exceptions import ConfigurationError
from src.models.entities.imputer_entity import Imputer
from src.models.entities.metric_entity import Metric
from src.models.entities.sample_spec_entity import SamplingTemplate
from src.models.entities.time_series_entity import TimeSeries

SCORE_SCOPES = ("removed", "full")


@dataclass(frozen=True)
class BenchmarkConfig:
    """
    Configuration complète d'un balayage impute_errors.

    Attributes:
        series (TimeSeries): Série complète de référence.
        template (SamplingTemplate): Schéma, taille de bloc et type de bloc.
        methods (tuple[Imputer, ...]): Méthodes comparées, dans l'ordre du profil.
        metric (Metric): Métrique d'erreur.
        percent_from (float): Premier pourcentage manquant de la grille.
        percent_to (float): Borne supérieure (incluse) de la grille.
        interval (float): Pas de la grille.
        repetition (int): Nombre de tirages par point de grille.
        master_seed (int): Graine maîtresse dont dérivent toutes les graines de cellule.
        score_on (str): "removed" (positions retirées) ou "full" (série entière).
    """

    series: TimeSeries
    methods: tuple[Imputer, ...]
    metric: Metric
    template: SamplingTemplate = SamplingTemplate()
    percent_from: float = 10.0
    percent_to: float = 90.0
    interval: float = 10.0
    repetition: int = 10
    master_seed: int = 0
    score_on: str = "removed"

    def __post_init__(self) -> None:
        object.__setattr__(self, "methods", tuple(self.methods))
        if not 0 < self.percent_from <= self.percent_to < 100:
            raise ConfigurationError(
                "Grille invalide : il faut 0 < miss_from <= miss_to < 100 "
                f"(reçu {self.percent_from}, {self.percent_to})"
            )
        if not math.isfinite(self.interval) or self.interval <= 0:
            raise ConfigurationError(f"Intervalle invalide : {self.interval}")
        if self.repetition < 1:
            raise ConfigurationError(f"Nombre de répétitions invalide : {self.repetition}")
        if not self.methods:
            raise ConfigurationError("Au moins une méthode d'imputation est requise.")
        names = [m.name for m in self.methods]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ConfigurationError(f"Noms de méthodes dupliqués : {duplicates}")
        if not 0 <= self.master_seed < 2**64:
            raise ConfigurationError(f"Graine maîtresse hors 64 bits : {self.master_seed}")
        if self.score_on not in SCORE_SCOPES:
            raise ConfigurationError(
                f"Portée de score inconnue : {self.score_on!r} (attendu {SCORE_SCOPES})"
            )

    @property
    def grid(self) -> tuple[float, ...]:
        """Équivalent de seq(from, to, by) : from, from+by, ... <= to."""
        steps = int(math.floor((self.percent_to - self.percent_from) / self.interval + 1e-9))
        return tuple(
            round(self.percent_from + i * self.interval, 10) for i in range(steps + 1)
        )


@dataclass(frozen=True)
class ErrorProfile:
    """
    Profil d'erreur (errprof) : moyennes par méthode et erreurs brutes.

    Attributes:
        parameter (str): Nom de la métrique.
        missing_percent (tuple[float, ...]): Grille de pourcentages manquants.
        methods (tuple[str, ...]): Méthodes dans l'ordre de configuration.
        means (dict[str, tuple[float, ...]]): Moyenne sur les répétitions, par point de grille.
        errall (dict[str, tuple[tuple[float, ...], ...]]): Erreurs brutes [grille x répétition].
        seeds (tuple[tuple[int, ...], ...]): Graines de cellule [grille x répétition].
    """

    parameter: str
    missing_percent: tuple[float, ...]
    methods: tuple[str, ...]
    means: dict[str, tuple[float, ...]]
    errall: dict[str, tuple[tuple[float, ...], ...]]
    seeds: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n_grid = len(self.missing_percent)
        if n_grid == 0 or not self.methods:
            raise ConfigurationError("Profil d'erreur vide.")
        if len(self.seeds) != n_grid:
            raise ConfigurationError("Dimensions des graines incohérentes avec la grille.")
        n_rep = len(self.seeds[0])
        if n_rep == 0 or any(len(row) != n_rep for row in self.seeds):
            raise ConfigurationError("Nombre de répétitions incohérent dans les graines.")
        for name in self.methods:
            if name not in self.means or name not in self.errall:
                raise ConfigurationError(f"Méthode '{name}' absente du profil.")
            matrix = self.errall[name]
            if len(matrix) != n_grid or any(len(row) != n_rep for row in matrix):
                raise ConfigurationError(f"Dimensions d'erreurs incohérentes pour '{name}'.")
            if not all(math.isfinite(e) for row in matrix for e in row):
                raise ConfigurationError(f"Erreur non finie dans le profil de '{name}'.")
            if len(self.means[name]) != n_grid:
                raise ConfigurationError(f"Nombre de moyennes incohérent pour '{name}'.")

    @property
    def repetition(self) -> int:
        return len(self.seeds[0])
