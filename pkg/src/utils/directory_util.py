# src/utils/directory_util.py
"""
Utilitaires pour la gestion des répertoires.

Responsabilité :
- Créer les répertoires parents des fichiers de sortie avant un balayage
"""

import logging
import os

from src.core.exceptions import UsageError

logger: logging.Logger = logging.getLogger(__name__)


def create_output_directories(*output_paths: str | None) -> None:
    """
    Crée les répertoires parents des fichiers de sortie s'ils n'existent pas.

    Les chemins None (sortie standard) sont ignorés.

    Raises:
        UsageError: Si un répertoire ne peut pas être créé ou si le chemin désigne un répertoire

    Example:
        >>> create_output_directories("out/prof.json", None, "out/figures/prof.svg")
    """
    for path in output_paths:
        if path is None:
            continue
        if os.path.isdir(path):
            raise UsageError(f"Le chemin de sortie est un répertoire : {path}")
        directory = os.path.dirname(os.path.abspath(path))
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            raise UsageError(f"Répertoire de sortie impossible à créer ({directory}) : {e}") from e
        logger.debug(f"Répertoire de sortie prêt : {directory}")
