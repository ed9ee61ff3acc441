# src/services/processors/benchmark_service.py
"""
Orchestration du balayage impute_errors.

Pour chaque cellule (point de grille g, répétition r) :
1. dérivation de la graine s(g, r) depuis la graine maîtresse
2. tirage d'un masque unique, appliqué une seule fois
3. imputation de CETTE même série à trous par toutes les méthodes (plan apparié)
4. score de chaque méthode contre la vérité retirée

Les cellules sont indépendantes et peuvent tourner en parallèle ; l'assemblage
se fait dans l'ordre (g, r, méthode), jamais dans l'ordre de complétion.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.core.config import DEFAULT_PLUGIN_TIMEOUT
from src.core.exceptions import BenchmarkCellError, ImputeBenchError, UndefinedMetricError
from src.imputers.imputer_registry import dispatch
from src.metrics.metric_registry import evaluate_metric
from src.models.entities.error_profile_entity import BenchmarkConfig, ErrorProfile
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.time_series_entity import MissingnessMask, TimeSeries
from src.services.processors.sampler_service import sample_mask
from src.utils.series.mask_util import apply_mask, extract_at

logger: logging.Logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1
SAMPLING_STAGE = "<échantillonnage>"


def _splitmix64(value: int) -> int:
    """Fonction de mélange SplitMix64 (Steele, Lea & Flood)."""
    value = (value + 0x9E3779B97F4A7C15) & _MASK64
    value = ((value ^ (value >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    value = ((value ^ (value >> 27)) * 0x94D049BB133111EB) & _MASK64
    return value ^ (value >> 31)


def derive_seed(master: int, grid_index: int, repetition_index: int) -> int:
    """
    Graine 64 bits d'une cellule, déterministe et indépendante de l'ordre d'exécution.

    Example:
        >>> derive_seed(42, 0, 1) != derive_seed(42, 1, 0)
        True
    """
    state = _splitmix64(master & _MASK64)
    state = _splitmix64(state ^ (grid_index & _MASK64))
    return _splitmix64(state ^ ((repetition_index * 0xD1B54A32D192ED03) & _MASK64))


def scored_pair(
    series: TimeSeries, mask: MissingnessMask, result: ImputationResult, score_on: str
) -> tuple[list[float], list[float]]:
    """
    Paire (vérité, imputation) à passer à la métrique.

    "removed" : positions retirées uniquement ; "full" : série entière, les
    positions observées contribuant une erreur nulle.
    """
    if score_on == "full":
        return list(series.values), list(result.values)
    return extract_at(series, mask), [result.values[i] for i in mask.removed]


def _run_cell(
    cfg: BenchmarkConfig, grid_index: int, repetition_index: int, timeout: float
) -> list[float]:
    percent = cfg.grid[grid_index]
    seed = derive_seed(cfg.master_seed, grid_index, repetition_index)
    try:
        mask = sample_mask(cfg.template.with_percent(percent, seed), len(cfg.series))
    except ImputeBenchError as e:
        raise BenchmarkCellError(e, SAMPLING_STAGE, grid_index, repetition_index, percent) from e
    gapped = apply_mask(cfg.series, mask)

    errors: list[float] = []
    for method_index, imputer in enumerate(cfg.methods):
        try:
            result = dispatch(
                imputer, gapped, seed=derive_seed(seed, method_index, 1), timeout=timeout
            )
            truth, imputed = scored_pair(cfg.series, mask, result, cfg.score_on)
            error = evaluate_metric(cfg.metric, truth, imputed, timeout)
            if not math.isfinite(error):
                raise UndefinedMetricError(f"{cfg.metric.name} non finie ({error})")
        except ImputeBenchError as e:
            raise BenchmarkCellError(
                e, imputer.name, grid_index, repetition_index, percent
            ) from e
        errors.append(float(error))

    logger.debug(
        f"Cellule ({grid_index}, {repetition_index}) à {percent:g}% : "
        + ", ".join(f"{m.name}={e:.4g}" for m, e in zip(cfg.methods, errors, strict=True))
    )
    return errors


def run_benchmark(
    cfg: BenchmarkConfig, jobs: int = 1, timeout: float = DEFAULT_PLUGIN_TIMEOUT
) -> ErrorProfile:
    """
    Exécute le balayage complet et assemble le profil d'erreur.

    Args:
        cfg: Configuration du balayage
        jobs: Nombre de cellules évaluées en parallèle (sans effet sur le résultat)
        timeout: Délai maximal par appel de plugin externe, en secondes

    Returns:
        ErrorProfile: Moyennes et erreurs brutes, identiques quel que soit `jobs`

    Raises:
        BenchmarkCellError: Première cellule en échec, dans l'ordre (g, r)
    """
    grid = cfg.grid
    cells = [(g, r) for g in range(len(grid)) for r in range(cfg.repetition)]
    logger.info(
        f"Balayage de '{cfg.series.label}' : {len(grid)} pourcentages x {cfg.repetition} "
        f"répétitions x {len(cfg.methods)} méthodes ({cfg.metric.name}, {jobs} job(s))"
    )

    if jobs <= 1:
        results = [_run_cell(cfg, g, r, timeout) for g, r in cells]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            # map restitue les résultats (et la première erreur) dans l'ordre des cellules
            results = list(executor.map(lambda cell: _run_cell(cfg, *cell, timeout), cells))

    raw = np.array(results, dtype=float).reshape(len(grid), cfg.repetition, len(cfg.methods))
    names = tuple(m.name for m in cfg.methods)
    errall = {
        name: tuple(tuple(float(e) for e in raw[g, :, k]) for g in range(len(grid)))
        for k, name in enumerate(names)
    }
    means = {
        name: tuple(float(np.mean(raw[g, :, k])) for g in range(len(grid)))
        for k, name in enumerate(names)
    }
    seeds = tuple(
        tuple(derive_seed(cfg.master_seed, g, r) for r in range(cfg.repetition))
        for g in range(len(grid))
    )

    logger.info("Balayage terminé.")
    return ErrorProfile(
        parameter=cfg.metric.name,
        missing_percent=grid,
        methods=names,
        means=means,
        errall=errall,
        seeds=seeds,
    )
