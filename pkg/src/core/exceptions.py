# src/core/exceptions.py
"""
Hiérarchie d'erreurs du banc d'essai.

Chaque classe porte le code de sortie que la CLI renvoie lorsqu'elle remonte
jusqu'au point d'entrée :
- 1 : erreur d'usage / de configuration
- 2 : erreur de données (entrée incomplète, échantillonnage, imputation, métrique)
- 3 : violation du protocole plugin
- 4 : erreur interne
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PLUGIN = 3
EXIT_INTERNAL = 4


class ImputeBenchError(Exception):
    """Erreur de base ; non spécialisée, elle est traitée comme interne."""

    exit_code: int = EXIT_INTERNAL


class ConfigurationError(ImputeBenchError):
    exit_code = EXIT_USAGE


class UsageError(ConfigurationError):
    """Arguments de ligne de commande invalides ou inconnus."""


class UnknownMethodError(ConfigurationError):
    pass


class InvalidParamsError(ConfigurationError):
    pass


class UnknownMetricError(ConfigurationError):
    pass


class DataError(ImputeBenchError):
    exit_code = EXIT_DATA


class IncompleteInputError(DataError):
    """La série d'entrée contient des valeurs manquantes ou non numériques."""


class SamplingError(DataError):
    pass


class DegenerateRequestError(SamplingError):
    """Le pourcentage demandé ne retire aucune observation."""


class BlockSizeError(SamplingError):
    pass


class ImputationError(DataError):
    pass


class UnimputableError(ImputationError):
    """Aucune valeur observée : rien à partir de quoi imputer."""


class DegenerateRangeError(ImputationError):
    pass


class MetricError(DataError):
    pass


class UndefinedMetricError(MetricError):
    pass


class PluginContractError(ImputeBenchError):
    """Un plugin externe n'a pas respecté le protocole stdin/stdout."""

    exit_code = EXIT_PLUGIN


class BenchmarkCellError(ImputeBenchError):
    """Erreur survenue dans une cellule (pourcentage, répétition) du balayage."""

    def __init__(
        self,
        cause: ImputeBenchError,
        method: str,
        grid_index: int,
        repetition_index: int,
        percent: float,
    ):
        self.cause = cause
        self.method = method
        self.grid_index = grid_index
        self.repetition_index = repetition_index
        self.percent = percent
        self.exit_code = cause.exit_code
        super().__init__(
            f"{type(cause).__name__} pour la méthode '{method}' "
            f"(pourcentage {percent:g}, grille {grid_index}, répétition {repetition_index}) : {cause}"
        )
