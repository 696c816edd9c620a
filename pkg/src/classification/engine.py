"""
Moteur de classification sur F.

Résout le système (c1c2)/(hc2) en beta, puis produit les tables de
candidats : partie divisorielle non nulle, cas intermédiaires sans partie
divisorielle, cas Ulrich. Chaque ligne porte le statut qui la résout.
"""

import logging
from typing import List, Optional, Set, Tuple

from src.algebra.chern import (
    Rank2Chern,
    chi_f,
    dual_twist_h,
    e_indicator,
    expected_c1c2,
    expected_hc2,
    identity_ledger,
    rank2_kernel,
    zero_locus_invariants,
)
from src.algebra.chow_ring import ChowClass, DivisorClass, Variety, beta as beta_of, f_codim2
from src.classification.splittings import decomposable_siblings
from src.classification.status import ClassificationRow, Rules, Status, canonical_orbit
from src.cohomology.line_bundles import cohom_f
from src.errors import UnsupportedOperationError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

ALLOWED_DELTAS: Tuple[Pair, ...] = ((0, 0), (0, 1), (0, 2), (1, 0), (2, 0))
INTERMEDIATE_ALPHAS: Tuple[Pair, ...] = ((0, 1), (0, 2), (1, 1), (1, 2))
ULRICH_ALPHA: Pair = (2, 2)


# ==================== SYSTEME EN BETA ====================


def solve_beta(alpha: Pair, delta: Pair) -> List[Pair]:
    """
    Solutions entières (b1, b2), bi >= 0, de

        b1 + b2       = hc2
        a1*b1 + a2*b2 = c1c2

    avec e = 1 ssi delta = alpha. Ordre : les plus équilibrées d'abord.
    """
    if tuple(delta) not in ALLOWED_DELTAS:
        raise UnsupportedOperationError(f"divisorial part {tuple(delta)} is not admissible")
    e = e_indicator(alpha, delta)
    hc2 = expected_hc2(alpha, e)
    c1c2 = expected_c1c2(alpha)
    solutions = [
        (b1, hc2 - b1)
        for b1 in range(hc2, -1, -1)
        if alpha[0] * b1 + alpha[1] * (hc2 - b1) == c1c2
    ]
    c1 = DivisorClass(Variety.F, *alpha)
    for beta in solutions:
        if any(identity_ledger(c1, beta, e)):
            raise AssertionError(f"identity residuals for alpha={alpha}, beta={beta}")
    return sorted(solutions, key=lambda b: (abs(b[0] - b[1]), -b[0]))


def _row(
    alpha: Pair,
    delta: Pair,
    beta: Pair,
    status: Status,
    e_class: Optional[ChowClass] = None,
    notes: Tuple[str, ...] = (),
) -> ClassificationRow:
    e = e_indicator(alpha, delta)
    chern = Rank2Chern.on_f(alpha, beta)
    return ClassificationRow(
        variety=Variety.F,
        alpha=tuple(alpha),
        delta=tuple(delta),
        e=e,
        hc2=expected_hc2(alpha, e),
        c1c2=expected_c1c2(alpha),
        coefficients=tuple(beta),
        e_class=e_class,
        status=status,
        zero_locus=zero_locus_invariants(chern),
        notes=notes,
    )


# ==================== PARTIE DIVISORIELLE NON NULLE ====================


def residual_class(alpha: Pair, delta: Pair, beta: Pair) -> ChowClass:
    """[E] = c2 - c1*D + D^2, classe du lieu des zéros de E(-D)."""
    c1 = DivisorClass(Variety.F, *alpha)
    d = DivisorClass(Variety.F, *delta)
    return f_codim2(beta) - c1 * d + d * d


def _divisorial_status(e_class: ChowClass) -> Status:
    degrees = beta_of(e_class)
    for index, value in enumerate(degrees, start=1):
        if value < 0:
            return Status.negative(f"deg(h{index}*[E]) = {value}", Rules.NEGATIVE_INTERSECTION)
    if e_class.is_zero:
        return Status.by_rule(Rules.GLOBALLY_GENERATED, "[E] = 0")
    if sorted(degrees) == [0, 1]:
        return Status.by_rule(Rules.KOSZUL_LINE, f"[E] = {e_class}")
    raise AssertionError(f"unresolved divisorial candidate [E] = {e_class}")


def divisorial_table() -> List[ClassificationRow]:
    """
    Candidats avec partie divisorielle D != 0 et c1 - D >= 0.

    Pour a1 = a2 on ne garde que d1 <= d2. Aucun ne survit.
    """
    rows: List[ClassificationRow] = []
    for alpha in INTERMEDIATE_ALPHAS:
        for delta in ALLOWED_DELTAS:
            if delta == (0, 0) or alpha[0] < delta[0] or alpha[1] < delta[1]:
                continue
            if alpha[0] == alpha[1] and delta[0] > delta[1]:
                continue
            for beta in solve_beta(alpha, delta):
                e_class = residual_class(alpha, delta, beta)
                status = _divisorial_status(e_class)
                logger.debug("alpha=%s delta=%s beta=%s : %s", alpha, delta, beta, status)
                rows.append(_row(alpha, delta, beta, status, e_class))
    logger.info("Table des parties divisorielles : %d lignes", len(rows))
    return rows


# ==================== RECHERCHE D'ANNULATION ====================


class VanishingSearch:
    """Fenêtres de la recherche de h^1 non nuls sur les twists négatifs."""

    T_WINDOW = (-12, -1)
    WIDE_T_WINDOW = (-40, -1)
    B_FLOOR = -12
    B_CEILING = 2


def vanishing_search(t_window: Pair = VanishingSearch.T_WINDOW) -> Set[Tuple[int, int, int, int]]:
    """
    Quadruplets (a2, b1, b2, t) avec h^1(O((t+b1)h1 + (t+b2-a2)h2)) != 0.

    0 <= a2 <= 2, |b1 - b2| <= 2, min(b1, b2) <= 0, bi <= 2. Le seul
    quadruplet attendu est (1, 2, 0, -1).
    """
    low, high = t_window
    hits: Set[Tuple[int, int, int, int]] = set()
    span = range(VanishingSearch.B_FLOOR, VanishingSearch.B_CEILING + 1)
    for a2 in range(0, 3):
        for b1 in span:
            for b2 in span:
                if abs(b1 - b2) > 2 or min(b1, b2) > 0:
                    continue
                for t in range(low, high + 1):
                    if cohom_f(t + b1, t + b2 - a2).dims[1]:
                        hits.add((a2, b1, b2, t))
    return hits


# ==================== CAS INTERMEDIAIRES ====================


def _sibling_notes(chern: Rank2Chern) -> Tuple[str, ...]:
    return tuple(
        f"same Chern data as {s.describe(Variety.F)}, dim Ext^1 = {s.ext1}"
        for s in decomposable_siblings(chern)
    )


def _intermediate_status(alpha: Pair, beta: Pair, chern: Rank2Chern) -> Status:
    if alpha == (0, 1):
        return Status.admissible("p2^*Omega(2h2), zero locus a line", Rules.INTERMEDIATE_LINE)
    if alpha == (1, 2):
        return Status.admissible("p1^*Omega(2h1+h2), zero locus a rational quartic", Rules.INTERMEDIATE_QUARTIC)
    if alpha == (1, 1) and beta[0] != beta[1]:
        return Status.by_rule(Rules.DOUBLE_LINE, "no indecomposable bundle")
    # c2(E(-L)) = 0 pour un facteur L : une section ne s'annule pas, E est scindé
    rule = Rules.SPLITS_EQUAL_FACTORS if alpha[0] == 0 else Rules.SPLITS_BOTH_FACTORS
    for splitting in decomposable_siblings(chern):
        if splitting.ext1 == 0:
            return Status.decomposable(splitting.describe(Variety.F), rule)
    raise AssertionError(f"unresolved intermediate candidate alpha={alpha}, beta={beta}")


def intermediate_table_f() -> List[ClassificationRow]:
    """Cas D = 0, e = 0, 0 < c1 < 2h ; un représentant par orbite."""
    rows: List[ClassificationRow] = []
    for alpha in INTERMEDIATE_ALPHAS:
        for beta in solve_beta(alpha, (0, 0)):
            if canonical_orbit(alpha, beta)[2]:
                continue
            chern = Rank2Chern.on_f(alpha, beta)
            status = _intermediate_status(alpha, beta, chern)
            rows.append(_row(alpha, (0, 0), beta, status, notes=_sibling_notes(chern)))
    logger.info("Cas intermédiaires sur F : %d lignes", len(rows))
    return rows


def intermediate_dual_pairs() -> List[Tuple[ClassificationRow, Pair, Pair]]:
    """Image (alpha', beta') de chaque cas intermédiaire par E -> E^v(h), canonisée."""
    images = []
    for row in intermediate_table_f():
        image = dual_twist_h(row.chern)
        alpha, beta, _ = canonical_orbit(image.alpha, image.beta)
        images.append((row, alpha, beta))
    return images


# ==================== CAS ULRICH ====================


class UlrichBounds:
    # degré d'un fibré en droites sur une courbe elliptique engendrant ses sections
    MIN_DEGREE = 3


def ulrich_beta_f() -> List[Pair]:
    """Solutions (b1, b2) pour c1 = 2h avec bi >= 3."""
    return [
        beta
        for beta in solve_beta(ULRICH_ALPHA, (0, 0))
        if min(beta) >= UlrichBounds.MIN_DEGREE
    ]


def ulrich_kernel(beta: Pair) -> Optional[Rank2Chern]:
    """
    Noyau de O(2eta1+eta2)^4 -> O(3eta1+eta2)^2 sur Phi (facteurs échangés
    selon beta) ; None si beta n'est pas (3,5) ou (5,3).
    """
    if sorted(beta) != [3, 5]:
        return None
    big, small = ((1, 2), (1, 3)) if beta[0] > beta[1] else ((2, 1), (3, 1))
    return rank2_kernel(
        [DivisorClass(Variety.PHI, *big)] * 4,
        [DivisorClass(Variety.PHI, *small)] * 2,
    )


def _ulrich_witness(beta: Pair) -> str:
    kernel = ulrich_kernel(beta)
    if kernel is not None:
        return f"restriction of the kernel bundle with c2 = {kernel.c2} on Phi"
    return "nonsplit extension 0 -> O(2h2) -> E -> O(2h1) -> 0"


def ulrich_table_f() -> List[ClassificationRow]:
    rows: List[ClassificationRow] = []
    for beta in ulrich_beta_f():
        alpha, canonical, swapped = canonical_orbit(ULRICH_ALPHA, beta)
        if swapped:
            continue
        chern = Rank2Chern.on_f(alpha, canonical)
        notes = _sibling_notes(chern) + (f"chi = {chi_f(chern)}",)
        rows.append(_row(alpha, (0, 0), canonical, Status.admissible(_ulrich_witness(beta), Rules.ELLIPTIC), notes=notes))
    return rows


# ==================== DROITES ====================


def line_table_f() -> List[ClassificationRow]:
    """c1 = 0 : D = c1, e = 1 ; le lieu des zéros est une droite."""
    rows = []
    for beta in solve_beta((0, 0), (0, 0)):
        if canonical_orbit((0, 0), beta)[2]:
            continue
        rows.append(_row((0, 0), (0, 0), beta, Status.admissible("zero locus a line", Rules.LINE)))
    return rows
