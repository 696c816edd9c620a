"""
Vue carte des régions : rendu ASCII ou SVG.
"""

from typing import Optional

from src.components.region_plot import RegionPlot
from src.errors import UnsupportedOperationError


class RegionsView:
    FORMATS = ("ascii", "svg")

    def __init__(self, bound: int = RegionPlot.DEFAULT_BOUND, fmt: Optional[str] = None, theme: str = "dark"):
        self.fmt = fmt or self.FORMATS[0]
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for regions")
        self.plot = RegionPlot(bound, theme)

    def build(self) -> str:
        return self.plot.to_svg() if self.fmt == "svg" else self.plot.to_ascii()
