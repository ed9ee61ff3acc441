# src/services/processors/sampler_service.py
"""
Génération des masques de données manquantes (équivalent de sample_dat).

Responsabilité :
- Tirer un masque MCAR (sous-ensemble uniforme d'indices)
- Tirer un masque MAR (blocs consécutifs, chevauchements non comptés deux fois,
  dernier bloc tronqué pour atteindre exactement le total demandé)
- Résumer la structure en séquences d'un masque
"""

import logging

import numpy as np

from src.core.config import MAX_BLOCK_PLACEMENTS
from src.core.exceptions import BlockSizeError, DegenerateRequestError, SamplingError
from src.models.entities.sample_spec_entity import SampleSpec, SamplingScheme
from src.models.entities.time_series_entity import MissingnessMask, RunSummary
from src.utils.series.mask_util import round_half_away_from_zero

logger: logging.Logger = logging.getLogger(__name__)


def missing_count(percent_missing: float, series_length: int) -> int:
    """Nombre d'observations à retirer : round(b x N / 100), arrondi loin de zéro."""
    return round_half_away_from_zero(percent_missing * series_length / 100)


def block_length(spec: SampleSpec, missing_total: int) -> int:
    """Longueur k d'un bloc MAR, en observations."""
    if spec.block_is_percent:
        return round_half_away_from_zero(spec.block * missing_total / 100)
    return round_half_away_from_zero(spec.block)


def sample_mask(spec: SampleSpec, series_length: int) -> MissingnessMask:
    """
    Tire un masque selon le schéma de la spécification.

    Le tirage est une fonction pure de (spec, series_length) : la même graine
    redonne toujours le même masque.

    Args:
        spec: Schéma, pourcentage manquant, bloc et graine
        series_length: Longueur N de la série (>= 2)

    Returns:
        MissingnessMask: Exactement round(b x N / 100) indices retirés

    Raises:
        DegenerateRequestError: Si aucun indice ne serait retiré
        BlockSizeError: Si le bloc MAR est nul ou plus long que la série
    """
    if series_length < 2:
        raise DegenerateRequestError(
            f"Série trop courte pour l'échantillonnage : {series_length} observation(s)"
        )
    m = missing_count(spec.percent_missing, series_length)
    if m < 1:
        raise DegenerateRequestError(
            f"{spec.percent_missing:g}% de {series_length} observations ne retire aucune valeur"
        )

    rng = np.random.default_rng(spec.seed)
    if spec.scheme is SamplingScheme.MCAR:
        removed = np.sort(rng.choice(series_length, size=m, replace=False))
    else:
        removed = _sample_blocks(rng, spec, series_length, m)

    logger.debug(
        f"Masque {spec.scheme.value} : {m}/{series_length} indices retirés (graine {spec.seed})"
    )
    return MissingnessMask(removed=tuple(int(i) for i in removed), series_length=series_length)


def _sample_blocks(
    rng: np.random.Generator, spec: SampleSpec, series_length: int, m: int
) -> np.ndarray:
    k = block_length(spec, m)
    if k < 1:
        raise BlockSizeError(
            f"Bloc de longueur nulle ({spec.block:g}{'%' if spec.block_is_percent else ''} de {m})"
        )
    if k > series_length:
        raise BlockSizeError(f"Bloc de {k} observations pour une série de {series_length}")

    # Les débuts sont tirés dans [0, N - k] : un bloc n'est jamais rogné par la fin de
    # série, seule la dernière pose est tronquée pour tomber exactement sur m.
    removed = np.zeros(series_length, dtype=bool)
    count = 0
    for _ in range(MAX_BLOCK_PLACEMENTS):
        start = int(rng.integers(0, series_length - k + 1))
        block = np.arange(start, start + k)
        fresh = block[~removed[block]]
        remaining = m - count
        if fresh.size > remaining:
            fresh = fresh[:remaining]
        removed[fresh] = True
        count += int(fresh.size)
        if count == m:
            return np.flatnonzero(removed)

    raise SamplingError(
        f"Placement MAR non terminé après {MAX_BLOCK_PLACEMENTS} blocs "
        f"({count}/{m} indices, bloc {k})"
    )


def describe_mask(mask: MissingnessMask) -> RunSummary:
    """Longueurs des séquences maximales d'indices consécutifs retirés."""
    if not mask.removed:
        return RunSummary(run_lengths=())
    removed = np.asarray(mask.removed)
    breaks = np.flatnonzero(np.diff(removed) != 1)
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks + 1, [removed.size]))
    return RunSummary(run_lengths=tuple(int(n) for n in ends - starts))
