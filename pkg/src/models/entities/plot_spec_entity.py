# src/models/entities/plot_spec_entity.py

from dataclasses import dataclass
from enum import Enum

from src.core.exceptions import ConfigurationError


class PlotType(Enum):
    BOXPLOT = "boxplot"
    LINE = "line"
    BAR = "bar"


@dataclass(frozen=True)
class PlotSpec:
    """Options de rendu SVG (plot_errors / plot_impute)."""

    plot_type: PlotType = PlotType.BOXPLOT
    title: str = ""
    width: int = 900
    height: int = 540
    show_missing: bool = False

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ConfigurationError(
                f"Dimensions de figure invalides : {self.width}x{self.height}"
            )
