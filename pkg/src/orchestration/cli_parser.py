# src/orchestration/cli_parser.py
"""
Module de parsing des arguments de ligne de commande.

Responsabilité :
- Configurer les sous-commandes bench, sample, impute et plot avec argparse
- Transformer toute erreur d'usage en UsageError (code de sortie 1)

Les options surchargeables par fichier de configuration ont None pour défaut :
la résolution des valeurs effectives se fait dans config_loader.
"""

import argparse

from src.core.config import (
    BUILTIN_DATASETS,
    DEFAULT_BLOCK,
    DEFAULT_ERROR_PARAMETER,
    DEFAULT_INTERVAL,
    DEFAULT_MISS_PERCENT_FROM,
    DEFAULT_MISS_PERCENT_TO,
    DEFAULT_PLUGIN_TIMEOUT,
    DEFAULT_REPETITION,
    DEFAULT_SAMPLING_SCHEME,
    DEFAULT_SCORE_ON,
    DEFAULT_SEED,
    PLOT_TYPES,
    SCORE_SCOPES,
)
from src.core.exceptions import UsageError

SUBCOMMANDS = ("bench", "sample", "impute", "plot")


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser qui lève UsageError au lieu de quitter avec le code 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", help="Fichier de configuration YAML (clés = options longues)")
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Journalisation DEBUG")
    verbosity.add_argument(
        "--quiet", action="store_true", help="Journalisation WARNING, pas de résumé sur stdout"
    )
    return parent


def _data_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_mutually_exclusive_group()
    source.add_argument(
        "--dataset",
        choices=sorted(BUILTIN_DATASETS),
        help="Jeu de données embarqué (par défaut: nottem)",
    )
    source.add_argument("--data", help="Fichier CSV d'une série complète")
    parent.add_argument("--column", help="Colonne du CSV (nom ou indice) ; défaut: première numérique")
    parent.add_argument("--period", type=int, help="Période saisonnière (12 mensuel, 4 trimestriel)")
    return parent


def _sampling_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--smps",
        choices=["mcar", "mar"],
        help=f"Schéma d'échantillonnage (par défaut: {DEFAULT_SAMPLING_SCHEME})",
    )
    parent.add_argument(
        "--blck", type=float, help=f"Taille de bloc MAR (par défaut: {DEFAULT_BLOCK:g})"
    )
    parent.add_argument(
        "--blckper",
        dest="blckper",
        action="store_true",
        default=None,
        help="La taille de bloc est un pourcentage du total retiré (par défaut)",
    )
    parent.add_argument(
        "--no-blckper",
        dest="blckper",
        action="store_false",
        help="La taille de bloc est un nombre d'observations",
    )
    parent.add_argument(
        "--seed", type=int, help=f"Graine maîtresse 64 bits (par défaut: {DEFAULT_SEED})"
    )
    return parent


def _methods_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--methods",
        nargs="+",
        help="Méthodes comparées (par défaut: na.approx na.interp na.interpolation na.locf na.mean)",
    )
    parent.add_argument(
        "--method-arg",
        action="append",
        metavar="NAME:KEY=VALUE",
        help="Option d'une méthode, ex. na.mean:option=median (répétable)",
    )
    parent.add_argument(
        "--external-method",
        action="append",
        metavar="NAME=CMD",
        help="Méthode externe (protocole IMPUTE sur stdin/stdout), répétable",
    )
    parent.add_argument(
        "--timeout",
        type=float,
        help=f"Délai maximal d'un plugin externe en secondes (par défaut: {DEFAULT_PLUGIN_TIMEOUT:g})",
    )
    return parent


def build_parser() -> CliArgumentParser:
    """
    Construit le parseur complet avec ses quatre sous-commandes.

    Example:
        >>> args = build_parser().parse_args(["bench", "--dataset", "austres"])
        >>> args.command
        'bench'
    """
    parser = CliArgumentParser(
        prog="impute-bench",
        description="Banc d'essai de méthodes d'imputation de séries temporelles",
    )
    common, data, sampling, methods = (
        _common_parent(),
        _data_parent(),
        _sampling_parent(),
        _methods_parent(),
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    bench = subparsers.add_parser(
        "bench",
        parents=[common, data, sampling, methods],
        help="Balayage complet : profil d'erreur JSON et graphique optionnel",
    )
    bench.add_argument(
        "--external-metric",
        action="append",
        metavar="NAME=CMD",
        help="Métrique externe (protocole METRIC sur stdin/stdout), répétable",
    )
    bench.add_argument(
        "--error-parameter",
        help=f"Métrique : rmse, mae, mape, pcv ou externe (par défaut: {DEFAULT_ERROR_PARAMETER})",
    )
    bench.add_argument(
        "--miss-from",
        type=float,
        help=f"Premier pourcentage manquant (par défaut: {DEFAULT_MISS_PERCENT_FROM:g})",
    )
    bench.add_argument(
        "--miss-to",
        type=float,
        help=f"Dernier pourcentage manquant (par défaut: {DEFAULT_MISS_PERCENT_TO:g})",
    )
    bench.add_argument(
        "--interval", type=float, help=f"Pas de la grille (par défaut: {DEFAULT_INTERVAL:g})"
    )
    bench.add_argument(
        "--repetition",
        type=int,
        help=f"Répétitions par pourcentage (par défaut: {DEFAULT_REPETITION})",
    )
    bench.add_argument(
        "--jobs",
        type=int,
        help="Cellules évaluées en parallèle (par défaut: IMPUTE_BENCH_JOBS ou nombre de CPU)",
    )
    bench.add_argument(
        "--score-on",
        choices=SCORE_SCOPES,
        help=f"Positions notées : retirées ou série entière (par défaut: {DEFAULT_SCORE_ON})",
    )
    bench.add_argument("-o", "--output", help="Profil JSON (par défaut: sortie standard)")
    bench.add_argument("--svg", help="Graphique SVG du profil")
    bench.add_argument("--plot-type", choices=PLOT_TYPES, help="Type de graphique (par défaut: boxplot)")
    bench.add_argument("--title", help="Titre du graphique")

    sample = subparsers.add_parser(
        "sample",
        parents=[common, data, sampling],
        help="Tire des masques et les trace en bandes empilées",
    )
    sample.add_argument(
        "--percent",
        type=float,
        action="append",
        help="Pourcentage manquant (répétable, par défaut: 50)",
    )
    sample.add_argument("-o", "--output", help="Masques JSON (par défaut: sortie standard)")
    sample.add_argument("--svg", help="Figure SVG des tirages")
    sample.add_argument("--title", help="Titre du graphique")

    impute = subparsers.add_parser(
        "impute",
        parents=[common, data, sampling, methods],
        help="Un masque par pourcentage, toutes les méthodes : CSV et superposition SVG",
    )
    impute.add_argument(
        "--percent",
        type=float,
        action="append",
        help="Pourcentage manquant (répétable, une colonne de facettes chacun ; par défaut: 50)",
    )
    impute.add_argument(
        "--show-missing",
        action="store_true",
        default=None,
        help="Trace les valeurs retirées en cercles ouverts",
    )
    impute.add_argument("-o", "--output", help="CSV des imputations (par défaut: sortie standard)")
    impute.add_argument("--svg", help="Figure SVG des imputations")
    impute.add_argument("--title", help="Titre du graphique")

    plot = subparsers.add_parser(
        "plot",
        parents=[common],
        help="Trace un profil JSON existant",
    )
    plot.add_argument("--in", dest="input_path", required=True, help="Profil JSON produit par bench")
    plot.add_argument(
        "--type", dest="plot_type", choices=PLOT_TYPES, help="Type de graphique (par défaut: boxplot)"
    )
    plot.add_argument("-o", "--output", help="Fichier SVG (par défaut: sortie standard)")
    plot.add_argument("--title", help="Titre du graphique")

    return parser


def parse_cli_arguments(argv: list[str]) -> argparse.Namespace:
    """
    Parse les arguments de la ligne de commande.

    Raises:
        UsageError: Option inconnue, valeur invalide ou sous-commande absente
    """
    return build_parser().parse_args(argv)
