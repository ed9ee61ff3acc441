# src/utils/formatters/number_formatter.py
import math
import re

# Littéral décimal : signe optionnel, chiffres avec point optionnel, exposant optionnel
DECIMAL_REAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def format_real(value: float) -> str:
    """Réel sur 17 chiffres significatifs (aller-retour exact), sans zéros superflus."""
    text = f"{float(value):.17g}"
    if text == "-0":
        return "0"
    return text


def parse_finite_real(text: str) -> float | None:
    """
    Convertit un littéral décimal en réel fini ; None sinon.

    Seuls les espaces et tabulations autour du nombre sont tolérés ; les formes que
    float() accepte en plus ("1_000", "nan", "infinity", espaces Unicode) sont refusées.
    """
    if not isinstance(text, str):
        return None
    candidate = text.strip(" \t\r")
    if not DECIMAL_REAL.fullmatch(candidate):
        return None
    value = float(candidate)
    if not math.isfinite(value):
        return None
    return value
