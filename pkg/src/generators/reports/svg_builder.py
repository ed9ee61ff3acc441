# src/generators/reports/svg_builder.py
from xml.sax.saxutils import escape, quoteattr


def fmt(value: float) -> str:
    """Coordonnée à deux décimales fixes (sortie identique d'un rendu à l'autre)."""
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


class SvgBuilder:
    """Accumulateur de texte SVG 1.1, un élément par ligne."""

    def __init__(self) -> None:
        self.parts: list[str] = []

    def header(self, width: int, height: int) -> None:
        self.parts.append('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n')
        self.parts.append(
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg" '
            'font-family="Arial, Helvetica, sans-serif">\n'
        )
        self.parts.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>\n')

    def comment(self, text: str) -> None:
        self.parts.append(f"<!-- {text.replace('--', '- -')} -->\n")

    def group_start(self, attr: dict[str, str]) -> None:
        attributes = " ".join(f"{key}={quoteattr(value)}" for key, value in attr.items())
        self.parts.append(f"<g {attributes}>\n" if attributes else "<g>\n")

    def group_end(self) -> None:
        self.parts.append("</g>\n")

    def rectangle(
        self, x1: float, y1: float, x2: float, y2: float, fill: str, extra: str = ""
    ) -> None:
        x, y = min(x1, x2), min(y1, y2)
        width, height = abs(x2 - x1), abs(y2 - y1)
        self.parts.append(
            f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt(width)}" height="{fmt(height)}" '
            f'fill="{fill}"{" " + extra if extra else ""}/>\n'
        )

    def line(
        self,
        x1: float,
        y1: float,
        x2: float,
        y2: float,
        stroke: str = "#000000",
        width: float = 1.0,
        extra: str = "",
    ) -> None:
        self.parts.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{width:g}"{" " + extra if extra else ""}/>\n'
        )

    def polyline(self, points: list[tuple[float, float]], stroke: str, width: float = 2.0) -> None:
        coordinates = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.parts.append(
            f'<polyline fill="none" stroke="{stroke}" stroke-width="{width:g}" '
            f'points="{coordinates}"/>\n'
        )

    def circle(
        self,
        cx: float,
        cy: float,
        r: float,
        fill: str,
        stroke: str = "none",
        css_class: str = "",
    ) -> None:
        class_attr = f' class="{css_class}"' if css_class else ""
        self.parts.append(
            f'<circle{class_attr} cx="{fmt(cx)}" cy="{fmt(cy)}" r="{r:g}" '
            f'fill="{fill}" stroke="{stroke}"/>\n'
        )

    def text(
        self,
        x: float,
        y: float,
        string: str,
        size: int = 12,
        anchor: str = "start",
        extra: str = "",
    ) -> None:
        self.parts.append(
            f'<text x="{fmt(x)}" y="{fmt(y)}" font-size="{size}" text-anchor="{anchor}"'
            f'{" " + extra if extra else ""}>{escape(string)}</text>\n'
        )

    def get_svg(self) -> str:
        return "".join(self.parts) + "</svg>\n"
