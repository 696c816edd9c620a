"""
Rendu de la carte des régions de O_F(x1*h1 + x2*h2) en ASCII et en SVG.
"""

import io
import logging
from typing import List, Optional, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Patch

from src.cohomology.regions import BOUNDARY_RAYS, LABELLED_BOUNDARIES, RegionLabel, region_label
from src.components.theme import RegionTheme
from src.errors import UnsupportedOperationError

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

GLYPHS = {
    RegionLabel.H0: "0",
    RegionLabel.H1_UPPER: "1",
    RegionLabel.H1_LOWER: "1",
    RegionLabel.H2_UPPER: "2",
    RegionLabel.H2_LOWER: "2",
    RegionLabel.H3: "3",
    RegionLabel.ZERO: ".",
}


class RegionPlot:
    """Carte des régions sur la grille [-bound, bound]^2."""

    MAX_BOUND = 100
    DEFAULT_BOUND = 9
    # tailles en points
    CELL = 28
    MAX_SIDE = 560
    MARGIN = 40
    LEGEND_ROW = 16
    # sel fixe des identifiants SVG, sans date : deux rendus sont identiques
    SVG_RC = {"svg.hashsalt": "sextics-regions", "svg.fonttype": "none", "font.family": "monospace", "font.size": 10}

    def __init__(self, bound: int = DEFAULT_BOUND, mode: str = "dark"):
        if not 1 <= bound <= self.MAX_BOUND:
            raise UnsupportedOperationError(
                f"plot bound must lie in [1, {self.MAX_BOUND}], got {bound}"
            )
        self.bound = bound
        self.mode = mode
        self.palette = RegionTheme.palette(mode)

    # ==================== GRILLE ====================

    def grid(self) -> List[List[RegionLabel]]:
        """Lignes de x2 = bound à x2 = -bound, colonnes x1 croissants."""
        b = self.bound
        return [[region_label(x1, x2) for x1 in range(-b, b + 1)] for x2 in range(b, -b - 1, -1)]

    def label_at(self, x1: int, x2: int) -> RegionLabel:
        if max(abs(x1), abs(x2)) > self.bound:
            raise UnsupportedOperationError(f"({x1}, {x2}) is outside the plot")
        return self.grid()[self.bound - x2][x1 + self.bound]

    # ==================== ASCII ====================

    def to_ascii(self) -> str:
        b = self.bound
        width = len(str(-b))
        lines = []
        for x2, row in zip(range(b, -b - 1, -1), self.grid()):
            lines.append(f"{x2:>{width}} | " + " ".join(GLYPHS[label] for label in row))
        lines.append(" " * width + " +-" + "-" * (2 * (2 * b + 1) - 1))
        lines.append(" " * width + f"   x1 from {-b} to {b}, x2 upwards")
        lines.append("")
        for label in RegionLabel:
            caption = label.caption.replace("≠", " != ")
            lines.append(f"  {GLYPHS[label]}  {label.value:<9} {caption}")
        lines.append("")
        lines.append("boundaries: " + ", ".join(LABELLED_BOUNDARIES))
        return "\n".join(lines) + "\n"

    # ==================== SVG ====================

    def _cell(self) -> float:
        """Côté d'une case en points, réduit pour les grandes bornes."""
        return min(self.CELL, self.MAX_SIDE / (2 * self.bound + 1))

    def _clip_ray(self, start: Tuple[int, int], direction: Tuple[int, int]) -> Optional[Tuple[Point, Point]]:
        """Segment de la demi-droite dans le carré du tracé ; None si elle en sort."""
        limit = self.bound + 0.5
        if max(abs(start[0]), abs(start[1])) > self.bound:
            return None
        k = min(
            (limit - s * (1 if d > 0 else -1)) / abs(d)
            for s, d in zip(start, direction)
            if d
        )
        end = (start[0] + k * direction[0], start[1] + k * direction[1])
        return (float(start[0]), float(start[1])), end

    def _draw_cells(self, ax, cell: float):
        b = self.bound
        points = {label: [] for label in RegionLabel}
        for x2, row in zip(range(b, -b - 1, -1), self.grid()):
            for x1, label in zip(range(-b, b + 1), row):
                points[label].append((x1, x2))
        for label, cells in points.items():
            if not cells:
                continue
            xs, ys = zip(*cells)
            ax.scatter(
                xs,
                ys,
                s=cell**2,
                marker="s",
                color=self.palette.regions[label],
                edgecolors=self.palette.grid,
                linewidths=0.5,
                gid=f"region-{label.value}",
            )

    def _draw_boundaries(self, ax):
        labelled = set()
        for equation, start, direction in BOUNDARY_RAYS:
            segment = self._clip_ray(start, direction)
            if segment is None:
                continue
            (x_a, y_a), (x_b, y_b) = segment
            ax.plot([x_a, x_b], [y_a, y_b], color=self.palette.boundary, linewidth=2)
            if equation in LABELLED_BOUNDARIES and equation not in labelled:
                labelled.add(equation)
                ax.annotate(
                    equation,
                    xy=(x_b, y_b),
                    xytext=(0, 4),
                    textcoords="offset points",
                    ha="center",
                    color=self.palette.text,
                    annotation_clip=False,
                )

    def _legend_handles(self) -> List[Patch]:
        return [
            Patch(
                facecolor=self.palette.regions[label],
                edgecolor=self.palette.grid,
                label=f"{label.caption} ({label.value})",
            )
            for label in RegionLabel
        ]

    def to_svg(self) -> str:
        cell = self._cell()
        side = (2 * self.bound + 1) * cell
        legend_height = len(RegionLabel) * self.LEGEND_ROW + self.MARGIN
        width = side + 2 * self.MARGIN
        height = side + 2 * self.MARGIN + legend_height
        limit = self.bound + 0.5

        with matplotlib.rc_context(self.SVG_RC):
            fig = plt.figure(figsize=(width / 72, height / 72), facecolor=self.palette.background)
            ax = fig.add_axes(
                [self.MARGIN / width, (self.MARGIN + legend_height) / height, side / width, side / height]
            )
            ax.set_xlim(-limit, limit)
            ax.set_ylim(-limit, limit)
            ax.set_axis_off()
            self._draw_cells(ax, cell)
            self._draw_boundaries(ax)
            fig.legend(
                handles=self._legend_handles(),
                loc="lower left",
                bbox_to_anchor=(self.MARGIN / width, self.MARGIN / (2 * height)),
                frameon=False,
                labelcolor=self.palette.text,
            )
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", facecolor=self.palette.background, metadata={"Date": None})
            plt.close(fig)

        logger.debug("Carte des régions : bound=%d, thème %s", self.bound, self.mode)
        return buffer.getvalue()
