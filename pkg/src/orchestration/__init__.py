# src/orchestration/__init__.py
"""
Module d'orchestration de impute-bench.

Ce module contient toute la logique d'orchestration de la ligne de commande,
séparant les responsabilités en composants modulaires.
"""

from src.orchestration.cli_parser import parse_cli_arguments
from src.orchestration.pipeline_executor import execute_pipeline, run_cli

__all__ = [
    "parse_cli_arguments",
    "execute_pipeline",
    "run_cli",
]
