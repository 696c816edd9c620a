"""
Cohomologie des fibrés en droites sur P2, F et Phi.

Sur F on applique les conditions de région (paire triée a1 <= a2) puis la
formule (-1)^i (a1+1)(a2+1)(a1+a2+2)/2 ; sur Phi, Künneth sur P2 x P2.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from src.algebra.chow_ring import Variety
from src.errors import UnsupportedOperationError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CohomTable:
    """Dimensions (h0, ..., hn) de la cohomologie d'un fibré en droites."""

    variety: str
    bundle: Tuple[int, ...]
    dims: Tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative cohomology dimension in {self.dims}")

    @property
    def euler(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    @property
    def nonzero_indices(self) -> List[int]:
        return [i for i, d in enumerate(self.dims) if d]

    def h(self, i: int) -> int:
        return self.dims[i]


@dataclass(frozen=True)
class LineBundleReport:
    """Bilan aCM / initialisé / Ulrich d'un fibré en droites."""

    variety: Variety
    a1: int
    a2: int
    is_acm: bool
    initial_twist: int
    is_initialized: bool
    is_ulrich: bool
    h0: int


class TwistScan:
    """Fenêtre de twists utilisée pour les vérifications par balayage."""

    SCAN_MARGIN = 5

    @classmethod
    def window(cls, a1: int, a2: int) -> range:
        radius = abs(a1) + abs(a2) + cls.SCAN_MARGIN
        return range(-radius, radius + 1)


# ==================== P2 ====================


def cohom_p2(a: int) -> Tuple[int, int, int]:
    """(h0, h1, h2) de O_P2(a)."""
    h0 = comb(a + 2, 2) if a >= 0 else 0
    h2 = comb(-a - 1, 2) if a <= -3 else 0
    return (h0, 0, h2)


# ==================== F ====================


def f_closed_form(a1: int, a2: int) -> int:
    """(a1+1)(a2+1)(a1+a2+2)/2, caractéristique d'Euler de O_F(a1, a2)."""
    return (a1 + 1) * (a2 + 1) * (a1 + a2 + 2) // 2


def f_region_index(a1: int, a2: int) -> Optional[int]:
    """Indice i dont la condition de région tient pour la paire triée."""
    low, high = sorted((a1, a2))
    if low >= 0:
        return 0
    if low <= -2 and low + high + 1 >= 0:
        return 1
    if high >= 0 and low + high + 3 <= 0:
        return 2
    if high <= -2:
        return 3
    return None


def cohom_f(a1: int, a2: int) -> CohomTable:
    dims = [0, 0, 0, 0]
    index = f_region_index(a1, a2)
    if index is not None:
        dims[index] = (-1) ** index * f_closed_form(a1, a2)
    return CohomTable("F", (a1, a2), tuple(dims))


# ==================== PHI ====================


def cohom_phi(a1: int, a2: int) -> CohomTable:
    first, second = cohom_p2(a1), cohom_p2(a2)
    dims = [0] * 5
    for p, hp in enumerate(first):
        for q, hq in enumerate(second):
            dims[p + q] += hp * hq
    return CohomTable("Phi", (a1, a2), tuple(dims))


def _p2_euler(a: int) -> int:
    return (a + 1) * (a + 2) // 2


# ==================== DISPATCH ====================


def cohom(variety: Variety, a1: int, a2: int) -> CohomTable:
    return cohom_f(a1, a2) if variety is Variety.F else cohom_phi(a1, a2)


def euler_line(variety: Variety, a1: int, a2: int) -> int:
    if variety is Variety.F:
        return f_closed_form(a1, a2)
    return _p2_euler(a1) * _p2_euler(a2)


def cohom_with_twists(variety: Variety, a1: int, a2: int, low: int, high: int) -> List[CohomTable]:
    """Une table par twist t dans [low, high]."""
    if low > high:
        raise UnsupportedOperationError(f"empty twist range [{low}, {high}]")
    return [cohom(variety, a1 + t, a2 + t) for t in range(low, high + 1)]


def ext_dimension(variety: Variety, source: Pair, target: Pair, i: int) -> int:
    """dim Ext^i(O(source), O(target)) = h^i(O(target - source))."""
    if not 0 <= i <= variety.dimension:
        raise UnsupportedOperationError(f"Ext^{i} out of range on {variety.value}")
    return cohom(variety, target[0] - source[0], target[1] - source[1]).dims[i]


# ==================== MODULES H^i_* ====================


def _intermediate_vanish(table: CohomTable) -> bool:
    return not any(table.dims[1:-1])


def acm_by_scan(variety: Variety, a1: int, a2: int) -> bool:
    """Critère aCM par balayage des twists (oracle indépendant)."""
    return all(
        _intermediate_vanish(cohom(variety, a1 + t, a2 + t)) for t in TwistScan.window(a1, a2)
    )


def is_acm(a1: int, a2: int) -> bool:
    """Critère analytique, valable sur F comme sur Phi."""
    return abs(a1 - a2) <= 2


def initial_twist(variety: Variety, a1: int, a2: int) -> int:
    for t in TwistScan.window(a1, a2):
        if cohom(variety, a1 + t, a2 + t).dims[0]:
            return t
    raise AssertionError(f"no twist of O({a1}, {a2}) has sections in the scan window")


def classify_line_bundle(variety: Variety, a1: int, a2: int) -> LineBundleReport:
    acm = is_acm(a1, a2)
    t0 = initial_twist(variety, a1, a2)
    h0 = cohom(variety, a1, a2).dims[0]
    return LineBundleReport(
        variety=variety,
        a1=a1,
        a2=a2,
        is_acm=acm,
        initial_twist=t0,
        is_initialized=t0 == 0,
        is_ulrich=acm and t0 == 0 and h0 == 6,
        h0=h0,
    )


def module_nonvanishing_by_scan(variety: Variety, a1: int, a2: int, i: int) -> Optional[int]:
    """Plus petit twist t de la fenêtre avec h^i(O(a1+t, a2+t)) != 0."""
    for t in TwistScan.window(a1, a2):
        if cohom(variety, a1 + t, a2 + t).dims[i]:
            return t
    return None


def module_nonvanishing(variety: Variety, a1: int, a2: int, i: int) -> Tuple[bool, Optional[int]]:
    """H^i_*(O(a1, a2)) != 0 ? Décision analytique, témoin trouvé par balayage."""
    if not 1 <= i <= variety.dimension - 1:
        raise UnsupportedOperationError(
            f"index {i} is not an intermediate cohomology index on {variety.value}"
        )
    if variety is Variety.F:
        nonzero = abs(a2 - a1) >= 3
    else:
        nonzero = i == 2 and abs(a2 - a1) >= 3
    witness = module_nonvanishing_by_scan(variety, a1, a2, i)
    if nonzero != (witness is not None):
        logger.error("H^%d_* de O(%d, %d) : critère et balayage divergent", i, a1, a2)
    return nonzero, witness


def line_bundle_census(variety: Variety, bound: int) -> Tuple[List[Pair], List[Pair]]:
    """
    Paires (a1, a2) de [-bound, bound]^2 initialisées et aCM, puis Ulrich.

    Tout passe par le balayage, sans le critère analytique.
    """
    initialized: List[Pair] = []
    ulrich: List[Pair] = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            if initial_twist(variety, a1, a2) != 0 or not acm_by_scan(variety, a1, a2):
                continue
            initialized.append((a1, a2))
            if cohom(variety, a1, a2).dims[0] == 6:
                ulrich.append((a1, a2))
    return initialized, ulrich
