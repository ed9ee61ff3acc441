# src/orchestration/pipeline_executor.py
"""
Module d'orchestration du pipeline principal.

Responsabilité :
- Parser la ligne de commande et résoudre la configuration
- Ajuster le niveau de journalisation (--verbose / --quiet)
- Router vers le pipeline de la sous-commande
- Traduire toute erreur en code de sortie
"""

import logging
from collections.abc import Callable

from src.core.exceptions import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, ImputeBenchError
from src.models.entities.cli_config_entity import CliConfig
from src.orchestration.cli_parser import parse_cli_arguments
from src.orchestration.config_loader import resolve_cli_config
from src.orchestration.data_pipeline import (
    run_bench_pipeline,
    run_impute_pipeline,
    run_plot_pipeline,
    run_sample_pipeline,
)

logger: logging.Logger = logging.getLogger(__name__)

PIPELINES: dict[str, Callable[[CliConfig], None]] = {
    "bench": run_bench_pipeline,
    "sample": run_sample_pipeline,
    "impute": run_impute_pipeline,
    "plot": run_plot_pipeline,
}


def _set_log_level(verbose: bool, quiet: bool) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif quiet:
        logging.getLogger().setLevel(logging.WARNING)
    else:
        logging.getLogger().setLevel(logging.INFO)


def execute_pipeline(cfg: CliConfig) -> None:
    """
    Exécute la sous-commande décrite par la configuration.

    Example:
        >>> execute_pipeline(CliConfig(command="plot", input_path="prof.json"))
    """
    logger.info(f"Démarrage de la commande {cfg.command}...")
    PIPELINES[cfg.command](cfg)
    logger.info(f"Commande {cfg.command} terminée.")


def run_cli(argv: list[str]) -> int:
    """
    Point d'entrée testable de la CLI.

    Returns:
        int: 0 succès, 1 usage, 2 données, 3 contrat plugin, 4 erreur interne
    """
    try:
        args = parse_cli_arguments(argv)
        _set_log_level(args.verbose, args.quiet)
        execute_pipeline(resolve_cli_config(args))
    except SystemExit as e:
        # --help et --version d'argparse
        return e.code if isinstance(e.code, int) else (EXIT_OK if e.code is None else EXIT_USAGE)
    except ImputeBenchError as e:
        logger.error(f"{type(e).__name__} : {e}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Erreur interne : {e}")
        return EXIT_INTERNAL
    return EXIT_OK
