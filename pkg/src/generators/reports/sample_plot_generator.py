# src/generators/reports/sample_plot_generator.py
import logging

from src.core.exceptions import ConfigurationError
from src.generators.base.base_svg_report_generator import (
    KEPT_COLOR,
    WITHHELD_COLOR,
    Axis,
    BaseSvgReportGenerator,
    padded_range,
)
from src.models.entities.plot_spec_entity import PlotSpec
from src.models.entities.time_series_entity import MissingnessMask, TimeSeries

logger: logging.Logger = logging.getLogger(__name__)

STRIP_GAP = 20


class SamplePlotGenerator(BaseSvgReportGenerator):
    """Bandes empilées, une par schéma d'échantillonnage : conservés en rouge, retirés en cercles ouverts."""

    MARGIN_RIGHT = 30

    def render(self, series: TimeSeries, samples: list[tuple[str, MissingnessMask]]) -> str:
        if not samples:
            raise ConfigurationError("Aucun masque à tracer.")
        for label, mask in samples:
            if mask.series_length != len(series):
                raise ConfigurationError(
                    f"Masque '{label}' de longueur {mask.series_length} "
                    f"pour une série de {len(series)}"
                )
        logger.info(f"Rendu de {len(samples)} masque(s) sur '{series.label}'")

        left, top, right, bottom = self.plot_box()
        strip_height = (bottom - top - STRIP_GAP * (len(samples) - 1)) / len(samples)
        low, high = padded_range(min(series.values), max(series.values))
        x_axis = Axis(0, max(len(series) - 1, 1), left, right)

        builder = self.start()
        for s, (label, mask) in enumerate(samples):
            strip_top = top + s * (strip_height + STRIP_GAP)
            y_axis = Axis(low, high, strip_top + strip_height, strip_top)
            removed = set(mask.removed)
            builder.group_start({"class": "strip", "data-sample": label})
            builder.rectangle(left, strip_top, right, strip_top + strip_height, "none", 'stroke="#999999"')
            builder.text(left + 6, strip_top + 14, label, size=12)
            for i, value in enumerate(series.values):
                if i in removed:
                    builder.circle(
                        x_axis.to_px(i),
                        y_axis.to_px(value),
                        2.5,
                        "none",
                        stroke=WITHHELD_COLOR,
                        css_class="point removed",
                    )
                else:
                    builder.circle(x_axis.to_px(i), y_axis.to_px(value), 2, KEPT_COLOR, css_class="point kept")
            builder.group_end()

        self.draw_x_labels(builder, [(x_axis.to_px(t), f"{t:.0f}") for t in x_axis.ticks()], bottom, left, right)
        self.draw_axis_titles(builder, "Indice", series.label)
        return builder.get_svg()


def render_samples(
    series: TimeSeries, samples: list[tuple[str, MissingnessMask]], spec: PlotSpec | None = None
) -> str:
    """
    Rendu SVG de plusieurs tirages sur une même série (comparaison MCAR / MAR).

    Example:
        >>> svg = render_samples(series, [("MCAR 50 %", mask_a), ("MAR 50 %", mask_b)])
    """
    return SamplePlotGenerator(spec or PlotSpec()).render(series, samples)
