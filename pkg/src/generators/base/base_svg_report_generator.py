# src/generators/base/base_svg_report_generator.py
from dataclasses import dataclass

from src.generators.reports.svg_builder import SvgBuilder
from src.models.entities.plot_spec_entity import PlotSpec

# Palette fixe, couleur attribuée par indice de méthode
PALETTE: tuple[str, ...] = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)

KEPT_COLOR = "#d62728"
IMPUTED_COLOR = "#1f77b4"
WITHHELD_COLOR = "#000000"
GRID_COLOR = "#d9d9d9"


def method_color(index: int) -> str:
    return PALETTE[index % len(PALETTE)]


def padded_range(low: float, high: float, pad: float = 0.05) -> tuple[float, float]:
    """Étendue élargie de `pad` de chaque côté ; étendue nulle élargie de ±1."""
    if high <= low:
        return low - 1.0, high + 1.0
    margin = (high - low) * pad
    return low - margin, high + margin


@dataclass(frozen=True)
class Axis:
    """Projection affine d'un intervalle de données vers un intervalle de pixels."""

    low: float
    high: float
    px_low: float
    px_high: float

    def to_px(self, value: float) -> float:
        return self.px_low + (value - self.low) / (self.high - self.low) * (
            self.px_high - self.px_low
        )

    def ticks(self, count: int = 5) -> list[float]:
        step = (self.high - self.low) / (count - 1)
        return [self.low + i * step for i in range(count)]


class BaseSvgReportGenerator:
    """
    Générateur abstrait de figures SVG.
    Gère le cadre commun : en-tête, titre, axes, graduations et légende.
    Les sous-classes construisent le contenu des panneaux.
    """

    MARGIN_LEFT = 80
    MARGIN_RIGHT = 170
    MARGIN_TOP = 50
    MARGIN_BOTTOM = 60

    def __init__(self, spec: PlotSpec):
        self.spec = spec

    def start(self) -> SvgBuilder:
        builder = SvgBuilder()
        builder.header(self.spec.width, self.spec.height)
        if self.spec.title:
            builder.text(self.spec.width / 2, 28, self.spec.title, size=18, anchor="middle")
        return builder

    def plot_box(self) -> tuple[float, float, float, float]:
        """(gauche, haut, droite, bas) de la zone de tracé principale."""
        return (
            self.MARGIN_LEFT,
            self.MARGIN_TOP,
            self.spec.width - self.MARGIN_RIGHT,
            self.spec.height - self.MARGIN_BOTTOM,
        )

    def draw_y_axis(self, builder: SvgBuilder, y_axis: Axis, left: float, right: float) -> None:
        builder.group_start({"class": "y-axis"})
        for tick in y_axis.ticks():
            y = y_axis.to_px(tick)
            builder.line(left, y, right, y, stroke=GRID_COLOR)
            builder.text(left - 8, y + 4, f"{tick:.4g}", size=11, anchor="end")
        builder.line(left, y_axis.px_low, left, y_axis.px_high, width=1.5)
        builder.group_end()

    def draw_x_labels(
        self,
        builder: SvgBuilder,
        positions: list[tuple[float, str]],
        bottom: float,
        left: float,
        right: float,
    ) -> None:
        builder.group_start({"class": "x-axis"})
        builder.line(left, bottom, right, bottom, width=1.5)
        for x, label in positions:
            builder.line(x, bottom, x, bottom + 5)
            builder.text(x, bottom + 18, label, size=11, anchor="middle")
        builder.group_end()

    def draw_axis_titles(self, builder: SvgBuilder, x_title: str, y_title: str) -> None:
        left, top, right, bottom = self.plot_box()
        builder.text((left + right) / 2, self.spec.height - 15, x_title, size=13, anchor="middle")
        middle = (top + bottom) / 2
        builder.text(
            20,
            middle,
            y_title,
            size=13,
            anchor="middle",
            extra=f'transform="rotate(-90 20 {middle:.2f})"',
        )

    def draw_legend(self, builder: SvgBuilder, entries: list[tuple[str, str]]) -> None:
        """Entrées (libellé, couleur) dans l'ordre donné."""
        x = self.spec.width - self.MARGIN_RIGHT + 20
        y = self.MARGIN_TOP + 10
        builder.group_start({"class": "legend"})
        for index, (label, color) in enumerate(entries):
            row = y + index * 22
            builder.rectangle(x, row - 9, x + 14, row + 3, color)
            builder.text(x + 20, row + 2, label, size=12)
        builder.group_end()
