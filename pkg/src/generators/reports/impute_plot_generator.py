# src/generators/reports/impute_plot_generator.py
"""
Superposition des imputations (équivalent de plot_impute).

Une facette par méthode, en une seule colonne ; plusieurs colonnes quand
plusieurs pourcentages sont comparés côte à côte. Points conservés en rouge,
points imputés en bleu, valeurs retirées en cercles noirs ouverts si
`show_missing`. Toutes les facettes partagent les mêmes axes.
"""

import logging
from dataclasses import dataclass

from src.core.exceptions import ConfigurationError
from src.generators.base.base_svg_report_generator import (
    IMPUTED_COLOR,
    KEPT_COLOR,
    WITHHELD_COLOR,
    Axis,
    BaseSvgReportGenerator,
    padded_range,
)
from src.generators.reports.svg_builder import SvgBuilder
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.plot_spec_entity import PlotSpec
from src.models.entities.time_series_entity import MissingnessMask, TimeSeries

logger: logging.Logger = logging.getLogger(__name__)

FACET_GAP = 24
COLUMN_GAP = 30


@dataclass(frozen=True)
class ImputePanel:
    """Une colonne de facettes : un masque et les imputations qui en résultent."""

    label: str
    mask: MissingnessMask
    results: dict[str, ImputationResult]


class ImputePlotGenerator(BaseSvgReportGenerator):
    MARGIN_RIGHT = 30

    def _validate(self, series: TimeSeries, panels: list[ImputePanel]) -> list[str]:
        if not panels:
            raise ConfigurationError("Aucune imputation à tracer.")
        methods = list(panels[0].results)
        if not methods:
            raise ConfigurationError("Aucune imputation à tracer : dictionnaire de résultats vide.")
        for panel in panels:
            if list(panel.results) != methods:
                raise ConfigurationError("Toutes les colonnes doivent porter les mêmes méthodes.")
            if panel.mask.series_length != len(series):
                raise ConfigurationError(
                    f"Masque de longueur {panel.mask.series_length} pour une série de {len(series)}"
                )
            for name, result in panel.results.items():
                if len(result.values) != len(series):
                    raise ConfigurationError(
                        f"Imputation '{name}' de longueur {len(result.values)} "
                        f"pour une série de {len(series)}"
                    )
        return methods

    def _value_axis_range(self, series: TimeSeries, panels: list[ImputePanel]) -> tuple[float, float]:
        # les valeurs retirées sont toujours incluses : l'échelle ne dépend pas de show_missing
        values = list(series.values)
        for panel in panels:
            for result in panel.results.values():
                values.extend(result.values[i] for i in panel.mask.removed)
        return padded_range(min(values), max(values))

    def _draw_facet(
        self,
        builder: SvgBuilder,
        series: TimeSeries,
        panel: ImputePanel,
        name: str,
        x_axis: Axis,
        y_axis: Axis,
    ) -> None:
        left, right = x_axis.px_low, x_axis.px_high
        top, bottom = y_axis.px_high, y_axis.px_low
        builder.group_start({"class": "facet", "data-method": name, "data-panel": panel.label})
        builder.rectangle(left, top, right, bottom, "none", 'stroke="#999999"')
        builder.text(left + 6, top + 14, f"{name} ({panel.label})", size=12)
        for tick in y_axis.ticks(3):
            builder.text(left - 6, y_axis.to_px(tick) + 4, f"{tick:.4g}", size=10, anchor="end")

        removed = set(panel.mask.removed)
        result = panel.results[name]
        builder.group_start({"class": "kept"})
        for i, value in enumerate(series.values):
            if i not in removed:
                builder.circle(x_axis.to_px(i), y_axis.to_px(value), 2, KEPT_COLOR, css_class="point kept")
        builder.group_end()
        builder.group_start({"class": "imputed"})
        for i in panel.mask.removed:
            builder.circle(
                x_axis.to_px(i), y_axis.to_px(result.values[i]), 2, IMPUTED_COLOR, css_class="point imputed"
            )
        builder.group_end()
        if self.spec.show_missing:
            builder.group_start({"class": "withheld"})
            for i in panel.mask.removed:
                builder.circle(
                    x_axis.to_px(i),
                    y_axis.to_px(series.values[i]),
                    3,
                    "none",
                    stroke=WITHHELD_COLOR,
                    css_class="point withheld",
                )
            builder.group_end()
        builder.group_end()

    def render_panels(self, series: TimeSeries, panels: list[ImputePanel]) -> str:
        methods = self._validate(series, panels)
        logger.info(
            f"Rendu des imputations de '{series.label}' : {len(methods)} facette(s) "
            f"x {len(panels)} colonne(s)"
        )
        left, top, right, bottom = self.plot_box()
        column_width = (right - left - COLUMN_GAP * (len(panels) - 1)) / len(panels)
        facet_height = (bottom - top - FACET_GAP * (len(methods) - 1)) / len(methods)
        low, high = self._value_axis_range(series, panels)
        last_index = max(len(series) - 1, 1)

        builder = self.start()
        for c, panel in enumerate(panels):
            column_left = left + c * (column_width + COLUMN_GAP)
            x_axis = Axis(0, last_index, column_left, column_left + column_width)
            for k, name in enumerate(methods):
                facet_top = top + k * (facet_height + FACET_GAP)
                y_axis = Axis(low, high, facet_top + facet_height, facet_top)
                self._draw_facet(builder, series, panel, name, x_axis, y_axis)
            self.draw_x_labels(
                builder,
                [(x_axis.to_px(t), f"{t:.0f}") for t in x_axis.ticks()],
                bottom,
                x_axis.px_low,
                x_axis.px_high,
            )
        self.draw_axis_titles(builder, "Indice", series.label)
        return builder.get_svg()


def render_impute(
    series: TimeSeries,
    mask: MissingnessMask,
    results: dict[str, ImputationResult],
    spec: PlotSpec | None = None,
) -> str:
    """
    Rendu SVG des imputations d'un même masque, une facette par méthode.

    Raises:
        ConfigurationError: Dictionnaire de résultats vide ou longueurs incohérentes
    """
    percent = 100 * len(mask) / len(series)
    panel = ImputePanel(label=f"{percent:.4g} %", mask=mask, results=results)
    return ImputePlotGenerator(spec or PlotSpec()).render_panels(series, [panel])


def render_impute_panels(
    series: TimeSeries, panels: list[ImputePanel], spec: PlotSpec | None = None
) -> str:
    """Plusieurs colonnes de facettes (un pourcentage manquant par colonne)."""
    return ImputePlotGenerator(spec or PlotSpec()).render_panels(series, panels)
