# src/generators/reports/error_plot_generator.py
"""
Graphiques de profil d'erreur (équivalent de plot_errors).

- boxplot : une boîte par (méthode, pourcentage) sur les erreurs brutes,
  chaque erreur brute tracée comme un point (inlier ou outlier)
- line : une polyligne des moyennes par méthode
- bar : une barre par (méthode, pourcentage) à hauteur de la moyenne

Chaque valeur tracée est un élément de classe `point`, une seule fois.
"""

import logging

from src.generators.base.base_svg_report_generator import (
    Axis,
    BaseSvgReportGenerator,
    method_color,
    padded_range,
)
from src.generators.reports.svg_builder import SvgBuilder
from src.models.entities.error_profile_entity import ErrorProfile
from src.models.entities.plot_spec_entity import PlotSpec, PlotType
from src.services.processors.statistics_service import StatisticsService

logger: logging.Logger = logging.getLogger(__name__)

DEGENERATE_BOX_WARNING = (
    "avertissement : une seule répétition par point, boîtes dégénérées tracées en traits"
)


class ErrorPlotGenerator(BaseSvgReportGenerator):
    def __init__(self, spec: PlotSpec, statistics_service: StatisticsService | None = None):
        super().__init__(spec)
        self.statistics_service = statistics_service or StatisticsService()

    def _slots(self, profile: ErrorProfile) -> tuple[list[float], float]:
        """Centre de chaque point de grille et largeur d'un emplacement."""
        left, _, right, _ = self.plot_box()
        width = (right - left) / len(profile.missing_percent)
        centers = [left + (g + 0.5) * width for g in range(len(profile.missing_percent))]
        return centers, width

    def _method_offset(self, k: int, n_methods: int, slot: float) -> tuple[float, float]:
        """Décalage horizontal et largeur de la méthode k dans un emplacement."""
        band = slot * 0.8 / n_methods
        return -slot * 0.4 + (k + 0.5) * band, band * 0.7

    def _y_axis(self, profile: ErrorProfile, use_raw: bool) -> Axis:
        _, top, _, bottom = self.plot_box()
        data_low, data_high = self.statistics_service.value_range(profile, use_raw)
        low, high = padded_range(data_low, data_high)
        if self.spec.plot_type is PlotType.BAR and data_low >= 0:
            # barres ancrées sur zéro
            low = 0.0
        return Axis(low, high, bottom, top)

    # ============================================================================
    # 🔶 Contenu par type de graphique
    # ============================================================================

    def _draw_boxplot(self, builder: SvgBuilder, profile: ErrorProfile, y_axis: Axis) -> None:
        centers, slot = self._slots(profile)
        boxes = self.statistics_service.box_statistics_for_profile(profile)
        for k, name in enumerate(profile.methods):
            color = method_color(k)
            builder.group_start({"class": "method", "data-method": name})
            for g, stats in enumerate(boxes[name]):
                offset, width = self._method_offset(k, len(profile.methods), slot)
                x = centers[g] + offset
                half = width / 2
                builder.line(x, y_axis.to_px(stats.whisker_low), x, y_axis.to_px(stats.q1), color)
                builder.line(x, y_axis.to_px(stats.q3), x, y_axis.to_px(stats.whisker_high), color)
                for whisker in (stats.whisker_low, stats.whisker_high):
                    y = y_axis.to_px(whisker)
                    builder.line(x - half / 2, y, x + half / 2, y, color)
                if stats.q3 > stats.q1:
                    builder.rectangle(
                        x - half,
                        y_axis.to_px(stats.q3),
                        x + half,
                        y_axis.to_px(stats.q1),
                        color,
                        extra=f'fill-opacity="0.25" stroke="{color}" class="box"',
                    )
                else:
                    y = y_axis.to_px(stats.q1)
                    builder.line(x - half, y, x + half, y, color, 1.5, extra='class="box"')
                y = y_axis.to_px(stats.median)
                builder.line(x - half, y, x + half, y, color, 2.5, extra='class="median"')
                for value in stats.inliers:
                    builder.circle(x, y_axis.to_px(value), 1.5, color, css_class="point inlier")
                for value in stats.outliers:
                    builder.circle(
                        x, y_axis.to_px(value), 3, "none", stroke=color, css_class="point outlier"
                    )
            builder.group_end()

    def _draw_lines(self, builder: SvgBuilder, profile: ErrorProfile, y_axis: Axis) -> None:
        centers, _ = self._slots(profile)
        for k, name in enumerate(profile.methods):
            color = method_color(k)
            points = [(x, y_axis.to_px(m)) for x, m in zip(centers, profile.means[name], strict=True)]
            builder.group_start({"class": "method", "data-method": name})
            builder.polyline(points, color)
            for x, y in points:
                builder.circle(x, y, 3.5, color, css_class="point")
            builder.group_end()

    def _draw_bars(self, builder: SvgBuilder, profile: ErrorProfile, y_axis: Axis) -> None:
        centers, slot = self._slots(profile)
        # base bornée à l'axe quand toutes les moyennes sont négatives
        base = y_axis.to_px(min(max(y_axis.low, 0.0), y_axis.high))
        for k, name in enumerate(profile.methods):
            color = method_color(k)
            builder.group_start({"class": "method", "data-method": name})
            for g, mean in enumerate(profile.means[name]):
                offset, width = self._method_offset(k, len(profile.methods), slot)
                x = centers[g] + offset
                builder.rectangle(
                    x - width / 2, y_axis.to_px(mean), x + width / 2, base, color, 'class="point"'
                )
            builder.group_end()

    # ============================================================================
    # 🔁 Rendu
    # ============================================================================

    def render(self, profile: ErrorProfile) -> str:
        plot_type = self.spec.plot_type
        logger.info(
            f"Rendu {plot_type.value} du profil {profile.parameter} "
            f"({len(profile.methods)} méthodes, {len(profile.missing_percent)} pourcentages)"
        )
        use_raw = plot_type is PlotType.BOXPLOT
        y_axis = self._y_axis(profile, use_raw)
        left, _, right, bottom = self.plot_box()

        builder = self.start()
        if use_raw and profile.repetition == 1:
            logger.warning("Boxplot avec une seule répétition : boîtes dégénérées.")
            builder.comment(DEGENERATE_BOX_WARNING)
        self.draw_y_axis(builder, y_axis, left, right)
        centers, _ = self._slots(profile)
        self.draw_x_labels(
            builder,
            [(x, f"{p:g}") for x, p in zip(centers, profile.missing_percent, strict=True)],
            bottom,
            left,
            right,
        )
        self.draw_axis_titles(builder, "Pourcentage de valeurs manquantes", profile.parameter)

        if plot_type is PlotType.BOXPLOT:
            self._draw_boxplot(builder, profile, y_axis)
        elif plot_type is PlotType.LINE:
            self._draw_lines(builder, profile, y_axis)
        else:
            self._draw_bars(builder, profile, y_axis)

        self.draw_legend(builder, [(name, method_color(k)) for k, name in enumerate(profile.methods)])
        return builder.get_svg()


def render_errors(
    profile: ErrorProfile,
    spec: PlotSpec | None = None,
    statistics_service: StatisticsService | None = None,
) -> str:
    """
    Rendu SVG d'un profil d'erreur.

    Args:
        profile: Profil produit par run_benchmark (ou relu depuis le JSON)
        spec: Type de graphique, titre et dimensions
        statistics_service: Service des boîtes à moustaches (créé si absent)

    Returns:
        str: Document SVG, identique à l'octet près pour des entrées identiques
    """
    return ErrorPlotGenerator(spec or PlotSpec(), statistics_service).render(profile)
