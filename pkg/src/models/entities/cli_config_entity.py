# src/models/entities/cli_config_entity.py

from dataclasses import dataclass, field

from src.core.config import (
    DEFAULT_BLOCK,
    DEFAULT_BLOCK_IS_PERCENT,
    DEFAULT_ERROR_PARAMETER,
    DEFAULT_INTERVAL,
    DEFAULT_MISS_PERCENT_FROM,
    DEFAULT_MISS_PERCENT_TO,
    DEFAULT_PLUGIN_TIMEOUT,
    DEFAULT_REPETITION,
    DEFAULT_SAMPLING_SCHEME,
    DEFAULT_SCORE_ON,
    DEFAULT_SEED,
)


@dataclass
class CliConfig:
    """
    Configuration résolue d'une commande (drapeaux > fichier YAML > environnement > défauts).

    Attributes:
        command (str): Sous-commande : bench, sample, impute ou plot.
        dataset (str | None): Jeu de données embarqué (nottem, austres).
        data_path (str | None): Fichier CSV fourni par l'utilisateur (exclusif avec dataset).
        column (str | None): Colonne du CSV (nom ou indice).
        period (int | None): Période saisonnière ; remplace celle du jeu embarqué.
        methods (list[str]): Méthodes comparées, dans l'ordre du profil.
        method_args (dict[str, dict[str, str]]): Options par méthode.
        external_methods (dict[str, tuple[str, ...]]): Plugins d'imputation (nom -> commande).
        external_metrics (dict[str, tuple[str, ...]]): Plugins de métrique (nom -> commande).
        percents (list[float]): Pourcentages des sous-commandes sample et impute.
    """

    command: str
    dataset: str | None = None
    data_path: str | None = None
    column: str | None = None
    period: int | None = None
    smps: str = DEFAULT_SAMPLING_SCHEME
    methods: list[str] = field(default_factory=list)
    method_args: dict[str, dict[str, str]] = field(default_factory=dict)
    external_methods: dict[str, tuple[str, ...]] = field(default_factory=dict)
    external_metrics: dict[str, tuple[str, ...]] = field(default_factory=dict)
    error_parameter: str = DEFAULT_ERROR_PARAMETER
    blck: float = DEFAULT_BLOCK
    blckper: bool = DEFAULT_BLOCK_IS_PERCENT
    miss_from: float = DEFAULT_MISS_PERCENT_FROM
    miss_to: float = DEFAULT_MISS_PERCENT_TO
    interval: float = DEFAULT_INTERVAL
    repetition: int = DEFAULT_REPETITION
    seed: int = DEFAULT_SEED
    jobs: int = 1
    score_on: str = DEFAULT_SCORE_ON
    timeout: float = DEFAULT_PLUGIN_TIMEOUT
    percents: list[float] = field(default_factory=lambda: [50.0])
    output: str | None = None
    svg: str | None = None
    plot_type: str = "boxplot"
    show_missing: bool = False
    input_path: str | None = None
    title: str | None = None
    quiet: bool = False
