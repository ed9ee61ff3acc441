# src/orchestration/config_loader.py
"""
Résolution de la configuration effective d'une commande.

Priorité : option explicite > fichier YAML (--config) > environnement
(IMPUTE_BENCH_JOBS pour jobs) > valeur par défaut.
"""

import argparse
import logging
from typing import Any

import yaml

from src.core.config import DEFAULT_DATASET, DEFAULT_METHODS, default_jobs
from src.core.exceptions import UsageError
from src.models.entities.cli_config_entity import CliConfig
from src.services.external.plugin_process import split_command

logger: logging.Logger = logging.getLogger(__name__)

# Clés acceptées dans le fichier YAML (options longues, tirets remplacés par _)
CONFIG_KEYS = frozenset(
    {
        "dataset",
        "data",
        "column",
        "period",
        "smps",
        "methods",
        "method_args",
        "external_methods",
        "external_metrics",
        "error_parameter",
        "blck",
        "blckper",
        "miss_from",
        "miss_to",
        "interval",
        "repetition",
        "seed",
        "jobs",
        "score_on",
        "timeout",
        "percent",
        "show_missing",
        "plot_type",
        "title",
    }
)

# Options CLI dont la valeur se résout directement (nom d'attribut -> champ de CliConfig)
SCALAR_FIELDS: dict[str, str] = {
    "column": "column",
    "period": "period",
    "smps": "smps",
    "error_parameter": "error_parameter",
    "blck": "blck",
    "blckper": "blckper",
    "miss_from": "miss_from",
    "miss_to": "miss_to",
    "interval": "interval",
    "repetition": "repetition",
    "seed": "seed",
    "score_on": "score_on",
    "timeout": "timeout",
    "show_missing": "show_missing",
    "plot_type": "plot_type",
    "title": "title",
}


def load_config_file(path: str) -> dict[str, Any]:
    """
    Lit un fichier YAML de configuration.

    Raises:
        UsageError: Fichier absent, YAML invalide, racine non dictionnaire ou clé inconnue
    """
    try:
        with open(path, encoding="utf-8") as f:
            document = yaml.safe_load(f)
    except OSError as e:
        raise UsageError(f"Fichier de configuration illisible ({path}) : {e}") from e
    except yaml.YAMLError as e:
        raise UsageError(f"YAML invalide dans {path} : {e}") from e

    if document is None:
        return {}
    if not isinstance(document, dict):
        raise UsageError(f"La configuration {path} doit être un dictionnaire de clés.")
    unknown = sorted(set(document) - CONFIG_KEYS)
    if unknown:
        raise UsageError(f"Clés de configuration inconnues dans {path} : {unknown}")
    logger.info(f"Configuration chargée depuis {path} : {sorted(document)}")
    return document


def parse_method_arg(text: str) -> tuple[str, str, str]:
    """
    Example:
        >>> parse_method_arg("na.mean:option=median")
        ('na.mean', 'option', 'median')
    """
    name, sep, assignment = text.partition(":")
    key, eq, value = assignment.partition("=")
    if not sep or not eq or not name or not key:
        raise UsageError(f"Option de méthode invalide : {text!r} (attendu NAME:KEY=VALUE)")
    return name.strip(), key.strip(), value.strip()


def _split(command: str) -> tuple[str, ...]:
    try:
        return split_command(command)
    except ValueError as e:
        raise UsageError(f"Commande de plugin mal formée : {command!r} ({e})") from e


def parse_named_command(text: str) -> tuple[str, tuple[str, ...]]:
    """`NAME=CMD` -> (nom, commande découpée façon shell)."""
    name, sep, command = text.partition("=")
    if not sep or not name.strip() or not command.strip():
        raise UsageError(f"Plugin invalide : {text!r} (attendu NAME=CMD)")
    return name.strip(), _split(command)


def _named_commands(value: Any, what: str) -> dict[str, tuple[str, ...]]:
    if not isinstance(value, dict):
        raise UsageError(f"'{what}' doit associer un nom à une commande.")
    return {str(name): _split(str(command)) for name, command in value.items()}


def _method_args_from_file(value: Any) -> dict[str, dict[str, str]]:
    if not isinstance(value, dict) or not all(isinstance(v, dict) for v in value.values()):
        raise UsageError("'method_args' doit associer chaque méthode à un dictionnaire d'options.")
    return {str(name): {str(k): str(v) for k, v in opts.items()} for name, opts in value.items()}


def _as_list(value: Any, what: str) -> list[Any]:
    if isinstance(value, (list, tuple)):
        return list(value)
    if isinstance(value, (str, int, float)):
        return [value]
    raise UsageError(f"'{what}' doit être une liste.")


FIELD_TYPES: dict[str, type] = {
    "column": str,
    "period": int,
    "smps": str,
    "error_parameter": str,
    "blck": float,
    "blckper": bool,
    "miss_from": float,
    "miss_to": float,
    "interval": float,
    "repetition": int,
    "seed": int,
    "jobs": int,
    "score_on": str,
    "timeout": float,
    "percent": float,
    "show_missing": bool,
    "plot_type": str,
    "title": str,
}


def _coerce(field_name: str, value: Any) -> Any:
    """Convertit une valeur YAML au type attendu du champ."""
    if value is None:
        return None
    target = FIELD_TYPES[field_name]
    if target is bool and not isinstance(value, bool):
        raise UsageError(f"Valeur invalide pour '{field_name}' : booléen attendu, reçu {value!r}")
    if target is int and isinstance(value, float) and not value.is_integer():
        raise UsageError(f"Valeur invalide pour '{field_name}' : entier attendu, reçu {value!r}")
    try:
        return target(value)
    except (TypeError, ValueError) as e:
        raise UsageError(f"Valeur invalide pour '{field_name}' : {value!r} ({e})") from e


def resolve_cli_config(args: argparse.Namespace) -> CliConfig:
    """
    Fusionne options, fichier de configuration, environnement et défauts.

    Args:
        args: Arguments parsés par cli_parser

    Returns:
        CliConfig: Configuration effective de la commande

    Raises:
        UsageError: Configuration incohérente (source de données double, plugin mal formé...)
    """
    cfg = CliConfig(command=args.command)
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}

    for attribute, field_name in SCALAR_FIELDS.items():
        value = getattr(args, attribute, None)
        if value is None and attribute in file_values:
            value = _coerce(field_name, file_values[attribute])
        if value is not None:
            setattr(cfg, field_name, value)

    # une source explicite sur la ligne de commande masque celle du fichier
    dataset, data_path = getattr(args, "dataset", None), getattr(args, "data", None)
    if dataset is None and data_path is None:
        dataset, data_path = file_values.get("dataset"), file_values.get("data")
        if dataset is not None and data_path is not None:
            raise UsageError("'dataset' et 'data' sont exclusifs dans la configuration.")
    cfg.data_path = str(data_path) if data_path is not None else None
    cfg.dataset = str(dataset) if dataset is not None else None
    if cfg.data_path is None and cfg.dataset is None:
        cfg.dataset = DEFAULT_DATASET

    methods = getattr(args, "methods", None)
    if methods is None and "methods" in file_values:
        methods = [str(m) for m in _as_list(file_values["methods"], "methods")]
    cfg.methods = list(methods) if methods is not None else list(DEFAULT_METHODS)

    if "method_args" in file_values:
        cfg.method_args = _method_args_from_file(file_values["method_args"])
    for text in getattr(args, "method_arg", None) or []:
        name, key, value = parse_method_arg(text)
        cfg.method_args.setdefault(name, {})[key] = value

    if "external_methods" in file_values:
        cfg.external_methods = _named_commands(file_values["external_methods"], "external_methods")
    for text in getattr(args, "external_method", None) or []:
        name, command = parse_named_command(text)
        cfg.external_methods[name] = command
    for name in cfg.external_methods:
        if name not in cfg.methods:
            cfg.methods.append(name)

    if "external_metrics" in file_values:
        cfg.external_metrics = _named_commands(file_values["external_metrics"], "external_metrics")
    for text in getattr(args, "external_metric", None) or []:
        name, command = parse_named_command(text)
        cfg.external_metrics[name] = command

    percents = getattr(args, "percent", None)
    if percents is None and "percent" in file_values:
        percents = [_coerce("percent", p) for p in _as_list(file_values["percent"], "percent")]
    if percents is not None:
        cfg.percents = list(percents)

    jobs = getattr(args, "jobs", None)
    if jobs is None and "jobs" in file_values:
        jobs = _coerce("jobs", file_values["jobs"])
    cfg.jobs = jobs if jobs is not None else default_jobs()
    if cfg.jobs < 1:
        raise UsageError(f"--jobs doit être >= 1 (reçu {cfg.jobs})")
    if cfg.timeout <= 0:
        raise UsageError(f"--timeout doit être > 0 (reçu {cfg.timeout})")

    cfg.output = getattr(args, "output", None)
    cfg.svg = getattr(args, "svg", None)
    cfg.input_path = getattr(args, "input_path", None)
    cfg.quiet = bool(getattr(args, "quiet", False))

    logger.debug(f"Configuration effective : {cfg}")
    return cfg
