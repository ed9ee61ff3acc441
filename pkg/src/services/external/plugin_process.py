# src/services/external/plugin_process.py
"""
Exécution des plugins externes (méthodes d'imputation et métriques).

Un plugin est un exécutable quelconque : il reçoit un texte ligne par ligne sur
son entrée standard et répond sur sa sortie standard. Un processus enfant est
lancé par appel ; aucun état n'est conservé entre deux appels.
"""

import logging
import shlex
import subprocess

from src.core.exceptions import PluginContractError
from src.utils.formatters.number_formatter import parse_finite_real

logger: logging.Logger = logging.getLogger(__name__)


def split_command(command: str) -> tuple[str, ...]:
    """Découpe une commande façon shell ("python3 mon_plugin.py --x 1")."""
    parts = tuple(shlex.split(command))
    if not parts:
        raise PluginContractError("Commande de plugin vide.")
    return parts


def run_plugin(command: tuple[str, ...], stdin_text: str, timeout: float) -> str:
    """
    Lance le plugin, lui transmet stdin_text et renvoie sa sortie standard.

    Raises:
        PluginContractError: Échec de lancement, délai dépassé, sortie non UTF-8 ou code non nul
    """
    logger.debug(f"Lancement du plugin : {' '.join(command)}")
    try:
        completed = subprocess.run(
            list(command),
            input=stdin_text,
            capture_output=True,
            text=True,
            encoding="utf-8",
            timeout=timeout,
            check=False,
        )
    except FileNotFoundError as e:
        raise PluginContractError(f"Plugin introuvable : {command[0]}") from e
    except PermissionError as e:
        raise PluginContractError(f"Plugin non exécutable : {command[0]}") from e
    except subprocess.TimeoutExpired as e:
        raise PluginContractError(
            f"Plugin {command[0]} interrompu après {timeout:g} s sans réponse"
        ) from e
    except OSError as e:
        raise PluginContractError(f"Échec du lancement de {command[0]} : {e}") from e
    except UnicodeDecodeError as e:
        raise PluginContractError(f"Plugin {command[0]} : sortie non UTF-8 ({e.reason})") from e

    if completed.returncode != 0:
        stderr_tail = completed.stderr.strip().splitlines()[-1:] if completed.stderr else []
        raise PluginContractError(
            f"Plugin {command[0]} terminé avec le code {completed.returncode}"
            + (f" : {stderr_tail[0]}" if stderr_tail else "")
        )
    return completed.stdout


def parse_output_reals(stdout: str, expected: int, plugin: str) -> list[float]:
    """
    Lit exactement `expected` réels finis, un par ligne (lignes vides finales ignorées).

    Raises:
        PluginContractError: Nombre de lignes incorrect, marqueur NA ou valeur non finie
    """
    lines = stdout.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != expected:
        raise PluginContractError(
            f"Plugin {plugin} : {len(lines)} ligne(s) reçue(s), {expected} attendue(s)"
        )
    values: list[float] = []
    for number, line in enumerate(lines, 1):
        value = parse_finite_real(line)
        if value is None:
            raise PluginContractError(
                f"Plugin {plugin} : ligne {number} n'est pas un réel fini ({line.strip()!r})"
            )
        values.append(value)
    return values
