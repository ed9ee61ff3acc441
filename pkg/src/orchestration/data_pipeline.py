# src/orchestration/data_pipeline.py
"""
Module des pipelines de sous-commandes.

Responsabilité :
- bench : balayage complet, profil JSON, résumé errprof et graphique optionnel
- sample : tirages de masques, JSON et bandes empilées
- impute : un masque par pourcentage, toutes les méthodes, CSV et superposition
- plot : rendu d'un profil JSON existant

Les sorties machine vont dans les fichiers demandés ou sur la sortie standard ;
les diagnostics passent uniquement par la journalisation (stderr).
"""

import logging
import os
import sys

from src.core.exceptions import UsageError
from src.generators.reports.error_plot_generator import render_errors
from src.generators.reports.impute_plot_generator import ImputePanel, render_impute_panels
from src.generators.reports.sample_plot_generator import render_samples
from src.imputers.imputer_registry import dispatch
from src.models.entities.cli_config_entity import CliConfig
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.plot_spec_entity import PlotSpec, PlotType
from src.orchestration.service_initializer import (
    build_benchmark_config,
    initialize_imputers,
    initialize_services,
    load_series,
    sampling_template,
)
from src.services.external.export_service import (
    format_profile,
    imputed_to_csv,
    masks_to_json,
    profile_to_json,
)
from src.services.processors.benchmark_service import derive_seed, run_benchmark
from src.services.processors.sampler_service import describe_mask, sample_mask
from src.utils.directory_util import create_output_directories
from src.utils.series.mask_util import apply_mask

logger: logging.Logger = logging.getLogger(__name__)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _plot_spec(cfg: CliConfig, default_title: str) -> PlotSpec:
    try:
        plot_type = PlotType(cfg.plot_type)
    except ValueError as e:
        raise UsageError(f"Type de graphique inconnu : {cfg.plot_type!r}") from e
    return PlotSpec(
        plot_type=plot_type,
        title=cfg.title if cfg.title is not None else default_title,
        show_missing=cfg.show_missing,
    )


def percent_output_path(path: str, percent: float) -> str:
    """
    Example:
        >>> percent_output_path("out/imputed.csv", 10.0)
        'out/imputed_p10.csv'
    """
    root, extension = os.path.splitext(path)
    return f"{root}_p{percent:g}{extension}"


# ============================================================================
# 🔶 bench
# ============================================================================


def run_bench_pipeline(cfg: CliConfig) -> None:
    create_output_directories(cfg.output, cfg.svg)
    stat_service, export_service = initialize_services()
    series = load_series(cfg)
    bench_cfg = build_benchmark_config(cfg, series)

    profile = run_benchmark(bench_cfg, jobs=cfg.jobs, timeout=cfg.timeout)

    if cfg.output:
        export_service.export_profile_to_json(cfg.output, profile)
        if not cfg.quiet:
            _emit(format_profile(profile))
    else:
        _emit(profile_to_json(profile))

    if cfg.svg:
        spec = _plot_spec(cfg, f"{profile.parameter} - {series.label}")
        export_service.export_svg(cfg.svg, render_errors(profile, spec, stat_service))


# ============================================================================
# 🔶 sample
# ============================================================================


def run_sample_pipeline(cfg: CliConfig) -> None:
    create_output_directories(cfg.output, cfg.svg)
    _, export_service = initialize_services()
    series = load_series(cfg)
    template = sampling_template(cfg)

    samples = []
    for index, percent in enumerate(cfg.percents):
        spec = template.with_percent(percent, derive_seed(cfg.seed, index, 0))
        mask = sample_mask(spec, len(series))
        summary = describe_mask(mask)
        logger.info(
            f"Tirage {spec.scheme.value} à {percent:g}% : {len(mask)} indices retirés, "
            f"{summary.run_count} séquence(s)"
        )
        samples.append((spec, mask, summary))

    if cfg.output:
        export_service.export_masks_to_json(cfg.output, samples)
    else:
        _emit(masks_to_json(samples))

    if cfg.svg:
        strips = [(f"{spec.scheme.value.upper()} {spec.percent_missing:g} %", mask) for spec, mask, _ in samples]
        svg = render_samples(series, strips, _plot_spec(cfg, f"Échantillonnage - {series.label}"))
        export_service.export_svg(cfg.svg, svg)


# ============================================================================
# 🔶 impute
# ============================================================================


def run_impute_pipeline(cfg: CliConfig) -> None:
    if cfg.output is None and len(cfg.percents) > 1:
        raise UsageError("Plusieurs --percent exigent -o/--output (un CSV par pourcentage).")
    outputs = (
        [percent_output_path(cfg.output, p) for p in cfg.percents]
        if cfg.output and len(cfg.percents) > 1
        else [cfg.output]
    )
    create_output_directories(*outputs, cfg.svg)
    _, export_service = initialize_services()
    series = load_series(cfg)
    template = sampling_template(cfg)
    registry = initialize_imputers(cfg)

    panels: list[ImputePanel] = []
    for index, percent in enumerate(cfg.percents):
        seed = derive_seed(cfg.seed, index, 0)
        mask = sample_mask(template.with_percent(percent, seed), len(series))
        gapped = apply_mask(series, mask)
        results: dict[str, ImputationResult] = {
            imputer.name: dispatch(
                imputer, gapped, seed=derive_seed(seed, method_index, 1), timeout=cfg.timeout
            )
            for method_index, imputer in enumerate(registry.all())
        }
        panels.append(ImputePanel(label=f"{percent:g} %", mask=mask, results=results))

        output = outputs[index] if len(outputs) > 1 else outputs[0]
        if output:
            export_service.export_imputed_to_csv(output, series, mask, results)
        else:
            _emit(imputed_to_csv(series, mask, results))

    if cfg.svg:
        svg = render_impute_panels(series, panels, _plot_spec(cfg, f"Imputations - {series.label}"))
        export_service.export_svg(cfg.svg, svg)


# ============================================================================
# 🔶 plot
# ============================================================================


def run_plot_pipeline(cfg: CliConfig) -> None:
    if not cfg.input_path:
        raise UsageError("plot exige --in PROFIL.json")
    create_output_directories(cfg.output)
    stat_service, export_service = initialize_services()
    profile = export_service.load_profile_from_json(cfg.input_path)
    svg = render_errors(profile, _plot_spec(cfg, profile.parameter), stat_service)
    if cfg.output:
        export_service.export_svg(cfg.output, svg)
    else:
        _emit(svg)
