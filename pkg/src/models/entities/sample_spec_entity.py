# src/models/entities/sample_spec_entity.py

import math
from dataclasses import dataclass
from enum import Enum

from src.core.exceptions import ConfigurationError


class SamplingScheme(Enum):
    MCAR = "mcar"
    MAR = "mar"

    @classmethod
    def from_name(cls, name: str) -> "SamplingScheme":
        try:
            return cls(name.lower())
        except ValueError as e:
            raise ConfigurationError(
                f"Schéma d'échantillonnage inconnu : {name!r} (attendu mcar ou mar)"
            ) from e


@dataclass(frozen=True)
class SamplingTemplate:
    """
    Paramètres d'échantillonnage communs à toute une grille de pourcentages.

    Attributes:
        scheme (SamplingScheme): MCAR (indices uniformes) ou MAR (blocs consécutifs).
        block (float): Taille de bloc, en pourcentage du total retiré ou en nombre d'observations.
        block_is_percent (bool): True si `block` est un pourcentage.
    """

    scheme: SamplingScheme = SamplingScheme.MCAR
    block: float = 50.0
    block_is_percent: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.block) or self.block <= 0:
            raise ConfigurationError(f"Taille de bloc invalide : {self.block}")
        if self.block_is_percent and self.block > 100:
            raise ConfigurationError(
                f"Taille de bloc en pourcentage hors de ]0, 100] : {self.block}"
            )
        if not self.block_is_percent and float(self.block) != int(self.block):
            raise ConfigurationError(
                f"Taille de bloc en nombre d'observations non entière : {self.block}"
            )

    def with_percent(self, percent_missing: float, seed: int) -> "SampleSpec":
        return SampleSpec(
            scheme=self.scheme,
            percent_missing=percent_missing,
            block=self.block,
            block_is_percent=self.block_is_percent,
            seed=seed,
        )


@dataclass(frozen=True)
class SampleSpec:
    """Spécification complète d'un tirage de masque (b, blck, blckper, smps, graine)."""

    scheme: SamplingScheme
    percent_missing: float
    block: float = 50.0
    block_is_percent: bool = True
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.percent_missing < 100:
            raise ConfigurationError(
                f"Pourcentage manquant hors de ]0, 100[ : {self.percent_missing}"
            )
        if not 0 <= self.seed < 2**64:
            raise ConfigurationError(f"Graine hors de l'intervalle 64 bits : {self.seed}")
        # MCAR ignore les champs de bloc mais ils doivent rester valides
        SamplingTemplate(self.scheme, self.block, self.block_is_percent)

    @property
    def template(self) -> SamplingTemplate:
        return SamplingTemplate(self.scheme, self.block, self.block_is_percent)
