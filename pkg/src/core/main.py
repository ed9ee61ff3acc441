# src/core/main.py
"""
Point d'entrée principal de impute-bench.

Ce module simplifié délègue toute la logique aux modules d'orchestration.
"""

import sys

from src.orchestration.pipeline_executor import run_cli


def main() -> None:
    """
    Point d'entrée principal du programme.

    Parse les arguments CLI, exécute la sous-commande et sort avec son code.
    """
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
