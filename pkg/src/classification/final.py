"""
Listes finales : les c1 possibles d'un fibré aCM indécomposable initialisé
de rang 2, avec c2, témoins et description du lieu des zéros.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.algebra.chern import ZeroLocusInvariants, chi_f
from src.algebra.chow_ring import Variety
from src.classification.engine import intermediate_table_f, line_table_f, ulrich_table_f
from src.classification.phi import classify_phi
from src.classification.status import ClassificationRow

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

FINAL_ALPHAS: Tuple[Pair, ...] = ((0, 0), (0, 1), (1, 2), (2, 2))

_CURVES = {
    (1, 0): "line",
    (4, 0): "rational normal quartic curve",
    (8, 1): "elliptic normal curve of degree 8",
}

_SURFACES = {
    1: "plane",
    4: "quartic rational normal scroll",
    8: "del Pezzo surface of degree 8",
}


@dataclass(frozen=True)
class FinalEntry:
    variety: Variety
    alpha: Pair
    classes: Tuple[Tuple[int, ...], ...]
    c2: Tuple[str, ...]
    witnesses: Tuple[str, ...]
    zero_locus: str
    degree: int
    arithmetic_genus: Optional[int]
    is_ulrich: bool


def describe_zero_locus(variety: Variety, invariants: ZeroLocusInvariants) -> str:
    if variety is Variety.F:
        key = (invariants.degree, invariants.arithmetic_genus)
        return _CURVES.get(
            key, f"curve of degree {key[0]} and arithmetic genus {key[1]}"
        )
    return _SURFACES.get(invariants.degree, f"surface of degree {invariants.degree}")


def _admissible_rows(variety: Variety) -> List[ClassificationRow]:
    if variety is Variety.F:
        rows = line_table_f() + intermediate_table_f() + ulrich_table_f()
    else:
        rows = classify_phi()
    return [row for row in rows if row.status.is_admissible]


def final_classification(variety: Variety) -> List[FinalEntry]:
    grouped: Dict[Pair, List[ClassificationRow]] = {}
    for row in _admissible_rows(variety):
        grouped.setdefault(row.alpha, []).append(row)
    if tuple(sorted(grouped)) != FINAL_ALPHAS:
        raise AssertionError(f"admissible c1 on {variety.value}: {sorted(grouped)}")

    entries: List[FinalEntry] = []
    for alpha in FINAL_ALPHAS:
        rows = grouped[alpha]
        loci = {row.zero_locus for row in rows}
        if len(loci) != 1:
            raise AssertionError(f"zero loci disagree for c1 = {alpha}: {loci}")
        invariants = loci.pop()
        witnesses = tuple(row.status.detail for row in rows) + tuple(
            note for row in rows for note in row.notes if "Ext^1 = 0" not in note
        )
        is_ulrich = alpha == (2, 2)
        if variety is Variety.F and is_ulrich and any(chi_f(row.chern) != 12 for row in rows):
            raise AssertionError("an Ulrich bundle of rank 2 on F has chi = 12")
        entries.append(
            FinalEntry(
                variety=variety,
                alpha=alpha,
                classes=tuple(row.coefficients for row in rows),
                c2=tuple(str(row.chern.c2) for row in rows),
                witnesses=witnesses,
                zero_locus=describe_zero_locus(variety, invariants),
                degree=invariants.degree,
                arithmetic_genus=invariants.arithmetic_genus,
                is_ulrich=is_ulrich,
            )
        )
    logger.info("Liste finale sur %s : %d entrées", variety.value, len(entries))
    return entries
