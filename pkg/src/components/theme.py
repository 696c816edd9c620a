"""
Module de gestion des thèmes de la carte des régions.
Palette Armorique (bleus profonds et gris ardoise), modes sombre et clair.
"""

from dataclasses import dataclass
from typing import Dict

from src.cohomology.regions import RegionLabel


@dataclass(frozen=True)
class Palette:
    """Couleurs résolues pour un mode donné."""

    background: str
    text: str
    grid: str
    boundary: str
    regions: Dict[RegionLabel, str]


class RegionTheme:
    """Gestionnaire de thèmes pour le rendu SVG (matplotlib)."""

    # Couleurs principales - Palette Armorique
    PRIMARY_MEDIUM = "#161F31"  # Bleu marine
    PRIMARY_LIGHT = "#54687E"  # Bleu gris
    ACCENT = "#6FA4E8"  # Bleu ardoise
    SURFACE = "#E0E1DD"  # Gris clair

    # Couleurs pour le mode clair
    LIGHT_BG = "#FFFFFF"
    LIGHT_TEXT = "#181F2D"

    # Couleurs pour le mode sombre
    DARK_BG = "#0D1B2A"
    DARK_TEXT = "#E0E1DD"

    # Une couleur par région
    H0_COLOR = "#4CAF50"  # Vert
    H1_UPPER_COLOR = "#FF9800"  # Orange
    H1_LOWER_COLOR = "#FFC107"  # Ambre
    H2_UPPER_COLOR = "#2196F3"  # Bleu
    H2_LOWER_COLOR = "#9C27B0"  # Violet
    H3_COLOR = "#F44336"  # Rouge

    MODES = ("dark", "light")

    @staticmethod
    def region_colors(is_dark: bool = True) -> Dict[RegionLabel, str]:
        zero = RegionTheme.PRIMARY_LIGHT if is_dark else RegionTheme.SURFACE
        return {
            RegionLabel.H0: RegionTheme.H0_COLOR,
            RegionLabel.H1_UPPER: RegionTheme.H1_UPPER_COLOR,
            RegionLabel.H1_LOWER: RegionTheme.H1_LOWER_COLOR,
            RegionLabel.H2_UPPER: RegionTheme.H2_UPPER_COLOR,
            RegionLabel.H2_LOWER: RegionTheme.H2_LOWER_COLOR,
            RegionLabel.H3: RegionTheme.H3_COLOR,
            RegionLabel.ZERO: zero,
        }

    @staticmethod
    def get_light_palette() -> Palette:
        """Retourne la palette claire."""
        return Palette(
            background=RegionTheme.LIGHT_BG,
            text=RegionTheme.LIGHT_TEXT,
            grid=RegionTheme.SURFACE,
            boundary=RegionTheme.PRIMARY_MEDIUM,
            regions=RegionTheme.region_colors(is_dark=False),
        )

    @staticmethod
    def get_dark_palette() -> Palette:
        """Retourne la palette sombre."""
        return Palette(
            background=RegionTheme.DARK_BG,
            text=RegionTheme.DARK_TEXT,
            grid=RegionTheme.PRIMARY_LIGHT,
            boundary=RegionTheme.ACCENT,
            regions=RegionTheme.region_colors(is_dark=True),
        )

    @staticmethod
    def palette(mode: str = "dark") -> Palette:
        if mode not in RegionTheme.MODES:
            raise ValueError(f"unknown theme {mode!r} (expected dark or light)")
        return RegionTheme.get_dark_palette() if mode == "dark" else RegionTheme.get_light_palette()
