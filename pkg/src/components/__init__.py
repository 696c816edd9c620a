"""Module des composants de rendu de la carte des régions."""

from .theme import RegionTheme
from .region_plot import RegionPlot

__all__ = [
    "RegionTheme",
    "RegionPlot",
]
