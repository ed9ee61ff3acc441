# src/models/entities/imputer_entity.py

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class ImputerKind(Enum):
    BUILT_IN = "built_in"
    EXTERNAL = "external"


@dataclass(frozen=True)
class Imputer:
    """
    Méthode d'imputation nommée et paramétrée.

    Attributes:
        name (str): Nom unique dans le registre (ex: "na.mean").
        params (dict[str, Any]): Options de la méthode (équivalent d'une entrée addl_arg).
        kind (ImputerKind): Méthode intégrée ou plugin externe.
        command (tuple[str, ...]): Exécutable et arguments pour un plugin externe.
    """

    name: str
    params: dict[str, Any] = field(default_factory=dict, hash=False)
    kind: ImputerKind = ImputerKind.BUILT_IN
    command: tuple[str, ...] = ()


@dataclass(frozen=True)
class ImputationResult:
    """Série complète renvoyée par une méthode : aucune valeur manquante, même longueur."""

    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)
