"""
Carte des régions du plan (x1, x2) selon la cohomologie de O_F(x1*h1 + x2*h2).
"""

from enum import Enum
from typing import Optional


class RegionLabel(Enum):
    """Région d'un point entier du plan, ordre de la légende."""

    H0 = "H0"
    H1_UPPER = "H1_upper"
    H2_UPPER = "H2_upper"
    H2_LOWER = "H2_lower"
    H1_LOWER = "H1_lower"
    H3 = "H3"
    ZERO = "Zero"

    @property
    def cohomology_index(self) -> Optional[int]:
        if self is RegionLabel.ZERO:
            return None
        return int(self.value[1])

    @property
    def caption(self) -> str:
        index = self.cohomology_index
        return "all h^i=0" if index is None else f"h^{index}≠0"

    def swapped(self) -> "RegionLabel":
        """Image par l'échange des deux facteurs."""
        return _SWAP.get(self, self)


_SWAP = {
    RegionLabel.H1_UPPER: RegionLabel.H1_LOWER,
    RegionLabel.H1_LOWER: RegionLabel.H1_UPPER,
    RegionLabel.H2_UPPER: RegionLabel.H2_LOWER,
    RegionLabel.H2_LOWER: RegionLabel.H2_UPPER,
}

# Demi-droites frontières : (équation, point de départ, direction)
BOUNDARY_RAYS = (
    ("x1+x2+1=0", (-2, 1), (-1, 1)),
    ("x1+x2+1=0", (1, -2), (1, -1)),
    ("x1=-2", (-2, 1), (0, 1)),
    ("x1=-2", (-2, -2), (0, -1)),
    ("x2=-2", (1, -2), (1, 0)),
    ("x2=-2", (-2, -2), (-1, 0)),
    ("x1+x2+3=0", (-3, 0), (-1, 1)),
    ("x1+x2+3=0", (0, -3), (1, -1)),
    ("x1=0", (0, 0), (0, 1)),
    ("x1=0", (0, -3), (0, -1)),
    ("x2=0", (0, 0), (1, 0)),
    ("x2=0", (-3, 0), (-1, 0)),
)

# Frontières légendées sur le tracé
LABELLED_BOUNDARIES = ("x1+x2+1=0", "x1=-2", "x2=-2", "x1+x2+3=0")


def _conditions(x1: int, x2: int):
    return {
        RegionLabel.H0: x1 >= 0 and x2 >= 0,
        RegionLabel.H1_UPPER: x1 <= -2 and x1 + x2 + 1 >= 0,
        RegionLabel.H2_UPPER: x2 >= 0 and x1 + x2 + 3 <= 0,
        RegionLabel.H2_LOWER: x1 >= 0 and x1 + x2 + 3 <= 0,
        RegionLabel.H1_LOWER: x2 <= -2 and x1 + x2 + 1 >= 0,
        RegionLabel.H3: x1 <= -2 and x2 <= -2,
    }


def region_label(x1: int, x2: int) -> RegionLabel:
    """Étiquette unique du point (x1, x2), Zero si aucune condition ne tient."""
    hits = [label for label, holds in _conditions(x1, x2).items() if holds]
    if len(hits) > 1:
        raise AssertionError(f"regions overlap at ({x1}, {x2}): {hits}")
    return hits[0] if hits else RegionLabel.ZERO
