# src/orchestration/service_initializer.py
"""
Module d'initialisation des services, registres et données.

Responsabilité :
- Initialiser les services (statistiques, export)
- Enregistrer les méthodes et métriques demandées (intégrées et plugins)
- Charger la série d'entrée (jeu embarqué ou CSV)
- Assembler la configuration de balayage
"""

import logging

from src.collectors.implementations.builtin_dataset_collector import load_builtin_dataset
from src.collectors.implementations.csv_file_collector import load_csv
from src.core.exceptions import ConfigurationError
from src.imputers.imputer_registry import ImputerRegistry
from src.metrics.metric_registry import MetricRegistry
from src.models.entities.cli_config_entity import CliConfig
from src.models.entities.error_profile_entity import BenchmarkConfig
from src.models.entities.sample_spec_entity import SamplingScheme, SamplingTemplate
from src.models.entities.time_series_entity import TimeSeries
from src.services.external.export_service import ExportService
from src.services.processors.statistics_service import StatisticsService

logger: logging.Logger = logging.getLogger(__name__)


def initialize_services() -> tuple[StatisticsService, ExportService]:
    """
    Initialise et retourne les services principaux.

    Example:
        >>> stats, export = initialize_services()
    """
    stat_service = StatisticsService()
    export_service = ExportService()
    logger.debug("Services initialisés.")
    return stat_service, export_service


def initialize_imputers(cfg: CliConfig) -> ImputerRegistry:
    """
    Enregistre les méthodes dans l'ordre de cfg.methods.

    Raises:
        UnknownMethodError: Méthode ni intégrée ni déclarée comme plugin
        InvalidParamsError: Options refusées par une méthode intégrée
    """
    registry = ImputerRegistry(timeout=cfg.timeout)
    unused = sorted(set(cfg.method_args) - set(cfg.methods))
    if unused:
        raise ConfigurationError(f"Options pour des méthodes non sélectionnées : {unused}")
    for name in cfg.methods:
        params = cfg.method_args.get(name, {})
        if name in cfg.external_methods:
            registry.register_external(name, cfg.external_methods[name], params)
        else:
            registry.register_builtin(name, params)
    logger.info(f"Méthodes enregistrées : {[m.name for m in registry.all()]}")
    return registry


def initialize_metrics(cfg: CliConfig) -> MetricRegistry:
    registry = MetricRegistry(timeout=cfg.timeout)
    for name, command in cfg.external_metrics.items():
        registry.register_external(name, command)
    return registry


def load_series(cfg: CliConfig) -> TimeSeries:
    """Charge la série d'entrée : jeu embarqué ou fichier CSV."""
    if cfg.data_path is not None:
        return load_csv(cfg.data_path, column=cfg.column, period=cfg.period)
    if cfg.column is not None:
        raise ConfigurationError("--column ne s'applique qu'à un fichier --data.")
    return load_builtin_dataset(cfg.dataset or "", period=cfg.period)


def sampling_template(cfg: CliConfig) -> SamplingTemplate:
    return SamplingTemplate(
        scheme=SamplingScheme.from_name(cfg.smps),
        block=cfg.blck,
        block_is_percent=cfg.blckper,
    )


def build_benchmark_config(cfg: CliConfig, series: TimeSeries) -> BenchmarkConfig:
    """
    Assemble la configuration de balayage à partir de la configuration CLI.

    Example:
        >>> bench_cfg = build_benchmark_config(cfg, load_series(cfg))
        >>> len(bench_cfg.grid)
        9
    """
    imputers = initialize_imputers(cfg)
    metrics = initialize_metrics(cfg)
    return BenchmarkConfig(
        series=series,
        methods=tuple(imputers.all()),
        metric=metrics.get(cfg.error_parameter),
        template=sampling_template(cfg),
        percent_from=cfg.miss_from,
        percent_to=cfg.miss_to,
        interval=cfg.interval,
        repetition=cfg.repetition,
        master_seed=cfg.seed,
        score_on=cfg.score_on,
    )
