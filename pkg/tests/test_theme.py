"""
Tests des thèmes et de la carte des régions.
"""

from dataclasses import fields

import pytest

from src.cohomology.regions import LABELLED_BOUNDARIES, RegionLabel
from src.components.region_plot import RegionPlot
from src.components.theme import Palette, RegionTheme
from src.errors import UnsupportedOperationError


# ==========================================
# Tests des palettes
# ==========================================


@pytest.mark.parametrize("mode", RegionTheme.MODES)
def test_seven_distinct_region_colors(mode):
    """Test une couleur distincte par région."""
    regions = RegionTheme.palette(mode).regions
    assert set(regions) == set(RegionLabel)
    assert len(set(regions.values())) == 7


def test_palette_modes():
    """Test que les modes sombre et clair diffèrent."""
    dark = RegionTheme.palette("dark")
    light = RegionTheme.palette("light")
    assert dark.background == RegionTheme.DARK_BG
    assert light.background == RegionTheme.LIGHT_BG
    assert dark.regions[RegionLabel.ZERO] != light.regions[RegionLabel.ZERO]
    assert dark.regions[RegionLabel.H0] == light.regions[RegionLabel.H0]


def test_palette_fields():
    """Test que la palette ne porte que les couleurs lues par le rendu."""
    names = [f.name for f in fields(Palette)]
    assert names == ["background", "text", "grid", "boundary", "regions"]


def test_unknown_mode():
    """Test qu'un thème inconnu est refusé."""
    with pytest.raises(ValueError):
        RegionTheme.palette("sepia")


# ==========================================
# Tests de la carte
# ==========================================


def test_label_at():
    """Test quelques points de la carte."""
    plot = RegionPlot(bound=9)
    assert plot.label_at(3, 2) is RegionLabel.H0
    assert plot.label_at(-7, 2) is RegionLabel.H2_UPPER
    assert plot.label_at(-2, 2) is RegionLabel.H1_UPPER
    assert plot.label_at(-3, -3) is RegionLabel.H3
    assert plot.label_at(-1, 0) is RegionLabel.ZERO
    with pytest.raises(UnsupportedOperationError):
        plot.label_at(10, 0)


def test_ascii_rows():
    """Test la ligne x2 = 2 et la légende du rendu texte."""
    text = RegionPlot(bound=3).to_ascii()
    row = next(line for line in text.splitlines() if line.startswith(" 2 |"))
    assert row == " 2 | 1 1 . 0 0 0 0"
    assert "h^1 != 0" in text
    assert text.rstrip().endswith(", ".join(LABELLED_BOUNDARIES))


def test_svg_content():
    """Test que le SVG porte les frontières, une série par région et la légende."""
    svg = RegionPlot(bound=4, mode="light").to_svg()
    assert "<svg" in svg
    for equation in LABELLED_BOUNDARIES:
        assert equation in svg
    for label in RegionLabel:
        assert f'id="region-{label.value}"' in svg
        assert f"({label.value})" in svg
    assert "all h^i=0 (Zero)" in svg
    assert RegionTheme.LIGHT_BG.lower() in svg.lower()


def test_svg_has_no_date():
    """Test que le SVG ne porte pas de date et ne dépend pas de l'exécution."""
    plot = RegionPlot(bound=3)
    first = plot.to_svg()
    assert "<dc:date>" not in first
    assert first == plot.to_svg()


def test_svg_cells_shrink_for_large_bounds():
    """Test que les cases rétrécissent pour garder un tracé de taille bornée."""
    assert RegionPlot(bound=4)._cell() == RegionPlot.CELL
    assert RegionPlot(bound=100)._cell() * 201 == pytest.approx(RegionPlot.MAX_SIDE)


def test_bound_limits():
    """Test que la borne du tracé reste dans [1, 100]."""
    with pytest.raises(UnsupportedOperationError):
        RegionPlot(bound=101)
    with pytest.raises(UnsupportedOperationError):
        RegionPlot(bound=0)
