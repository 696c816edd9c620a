"""
Sommes directes de fibrés en droites ayant des données de Chern prescrites.
"""

import logging
from typing import List, NamedTuple, Tuple

from src.algebra.chern import Rank2Chern, decomposable
from src.algebra.chow_ring import DivisorClass, Variety
from src.cohomology.line_bundles import (
    cohom,
    ext_dimension,
    initial_twist,
    is_acm,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Splitting(NamedTuple):
    """O(first) + O(second), avec la dimension de Ext^1 entre les facteurs."""

    first: Pair
    second: Pair
    ext1: int

    def describe(self, variety: Variety) -> str:
        return f"{line_name(variety, self.first)} + {line_name(variety, self.second)}"


def line_name(variety: Variety, pair: Pair) -> str:
    divisor = DivisorClass(variety, *pair)
    return f"O({divisor})"


def decomposable_siblings(chern: Rank2Chern, bound: int = 6) -> List[Splitting]:
    """
    Toutes les sommes O(a) + O(b) initialisées et aCM avec les mêmes (c1, c2).

    ext1 est le max de dim Ext^1 dans les deux sens : une extension non
    scindée existe dès qu'il est non nul.
    """
    variety = chern.variety
    alpha = chern.alpha
    found: List[Splitting] = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            a = (a1, a2)
            b = (alpha[0] - a1, alpha[1] - a2)
            if a > b or not (is_acm(*a) and is_acm(*b)):
                continue
            if min(initial_twist(variety, *a), initial_twist(variety, *b)) != 0:
                continue
            candidate = decomposable(DivisorClass(variety, *a), DivisorClass(variety, *b))
            if candidate.c2 != chern.c2:
                continue
            ext1 = max(
                ext_dimension(variety, a, b, 1),
                ext_dimension(variety, b, a, 1),
            )
            found.append(Splitting(a, b, ext1))
    logger.debug("%s : %d sommes directes compatibles", chern, len(found))
    return found


def decomposable_ulrich_splittings(variety: Variety, bound: int = 6) -> List[Splitting]:
    """Sommes de deux fibrés en droites Ulrich : c1 = 2h, h0 = 6 + 6."""
    found: List[Splitting] = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            a = (a1, a2)
            b = (2 - a1, 2 - a2)
            if a > b or not (is_acm(*a) and is_acm(*b)):
                continue
            if initial_twist(variety, *a) or initial_twist(variety, *b):
                continue
            if cohom(variety, *a).dims[0] + cohom(variety, *b).dims[0] != 12:
                continue
            found.append(
                Splitting(a, b, max(ext_dimension(variety, a, b, 1), ext_dimension(variety, b, a, 1)))
            )
    return found


def line_indecomposability_check(variety: Variety, bound: int = 6) -> List[Splitting]:
    """
    Sommes O(M) + O(-M) de c2 = h2^2 (resp. eta2^2) ; la liste doit être vide.

    Le fibré de la droite (ou du plan) n'est donc jamais scindé.
    """
    if variety is Variety.F:
        target = Rank2Chern.on_f((0, 0), (1, 0))
    else:
        target = Rank2Chern.on_phi((0, 0), (1, 0, 0))
    hits = []
    for m1 in range(-bound, bound + 1):
        for m2 in range(-bound, bound + 1):
            split = decomposable(DivisorClass(variety, m1, m2), DivisorClass(variety, -m1, -m2))
            if split.c2 == target.c2:
                hits.append(Splitting((m1, m2), (-m1, -m2), 0))
    return hits

