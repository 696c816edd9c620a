"""
Bornes sur c1 = a1*h1 + a2*h2 pour un fibré aCM initialisé de rang 2 sur F.

La borne supérieure passe par chi(E^v(h)), dont la forme symbolique est
obtenue avec sympy à partir de Riemann-Roch et du système (c1c2)/(hc2).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import sympy

from src.algebra.chern import (
    ChernNumbers,
    Rank2Chern,
    RiemannRoch,
    dual_twist_h_closed_form,
    expected_c1c2,
    expected_hc2,
    zero_locus_invariants,
)
from src.algebra.chow_ring import Variety
from src.classification.engine import solve_beta
from src.classification.splittings import decomposable_siblings
from src.classification.status import ClassificationRow, Rules, Status
from src.cohomology.line_bundles import cohom_f

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

A1, A2 = sympy.symbols("a1 a2")


@dataclass(frozen=True)
class BoxVerdict:
    """Sort d'un c1 (trié) de la boîte de recherche."""

    alpha: Pair
    status: Status


class AlphaBox:
    LOW = -4
    HIGH = 6
    REGULARITY_BOUND = 4


# ==================== CHI(E^v(h)) ====================


def chi_dual_twist_polynomial() -> sympy.Expr:
    """chi(E^v(h)) comme polynôme en (a1, a2), pour D = 0."""
    b1, b2 = sympy.symbols("b1 b2")
    hc2 = 2 + sympy.Rational(1, 2) * (A1**2 + 4 * A1 * A2 + A2**2 - 3 * A1 - 3 * A2)
    c1c2 = A1**2 * A2 + A1 * A2**2
    alpha, beta = dual_twist_h_closed_form((A1, A2), (b1, b2))
    twelve = RiemannRoch.twelve_chi(ChernNumbers.closed_form(alpha, beta))
    solution = sympy.solve([b1 + b2 - hc2, A1 * b1 + A2 * b2 - c1c2], [b1, b2], dict=True)
    if len(solution) != 1:
        raise AssertionError("the identity system should have a unique generic solution")
    chi = sympy.cancel(twelve.subs(solution[0]) / 12)
    return sympy.expand(chi)


def chi_dual_twist(alpha: Pair) -> int:
    value = chi_dual_twist_polynomial().subs({A1: alpha[0], A2: alpha[1]})
    return int(value)


# ==================== BORNE SUPERIEURE ====================


def _no_solution_detail(alpha: Pair) -> str:
    """Différence des deux équations : (a2 - a1)*b2 = c1c2 - a1*hc2."""
    hc2 = expected_hc2(alpha, 0)
    c1c2 = expected_c1c2(alpha)
    return f"{alpha[1] - alpha[0]}*b2 = {c1c2 - alpha[0] * hc2}"


def _bound_row(alpha: Pair, beta: Tuple[int, ...], status: Status, notes=()) -> ClassificationRow:
    zero_locus = zero_locus_invariants(Rank2Chern.on_f(alpha, beta)) if beta else None
    return ClassificationRow(
        variety=Variety.F,
        alpha=alpha,
        delta=(0, 0),
        e=0,
        hc2=expected_hc2(alpha, 0),
        c1c2=expected_c1c2(alpha),
        coefficients=tuple(beta),
        e_class=None,
        status=status,
        zero_locus=zero_locus,
        notes=tuple(notes),
    )


def upper_bound_elimination() -> List[ClassificationRow]:
    """
    Candidats réguliers a1 <= a2, a2 in {3, 4}, plus le cas limite (2, 2).

    chi(E^v(h)) = 12 - 3a1 - 3a2 doit s'annuler ; il reste (1, 3), sans
    solution entière, et (0, 4), qui force c2 = 4h2^2 et un E scindé.
    """
    candidates = [(a1, a2) for a2 in (3, 4) for a1 in range(0, 3)] + [(2, 2)]
    rows: List[ClassificationRow] = []
    for alpha in candidates:
        chi = chi_dual_twist(alpha)
        note = (f"chi(E^v(h)) = {chi}",)
        if chi:
            rows.append(_bound_row(alpha, (), Status.by_rule(Rules.CHI_DUAL_TWIST, note[0])))
            continue
        solutions = solve_beta(alpha, (0, 0))
        if not solutions:
            rows.append(_bound_row(alpha, (), Status.no_integer_solution(_no_solution_detail(alpha), Rules.NO_INTEGER_BETA), note))
        elif alpha == (2, 2):
            rows.append(_bound_row(alpha, (), Status.admissible("bound attained, E is Ulrich", Rules.ULRICH_BOUND), note))
        else:
            beta = solutions[0]
            chern = Rank2Chern.on_f(alpha, beta)
            splittings = [s.describe(Variety.F) for s in decomposable_siblings(chern) if not s.ext1]
            detail = f"c2 = {chern.c2}" + (f", E = {splittings[0]}" if splittings else "")
            rows.append(_bound_row(alpha, beta, Status.by_rule(Rules.SPLITS_ON_FOUR_LINES, detail), note))
        logger.debug("borne supérieure %s : %s", alpha, rows[-1].status)
    return rows


# ==================== BOITE DES c1 ====================


def alpha_box(low: int = AlphaBox.LOW, high: int = AlphaBox.HIGH) -> List[BoxVerdict]:
    """Chaque c1 trié de [low, high]^2 avec la raison de son exclusion."""
    upper: Dict[Pair, Status] = {row.alpha: row.status for row in upper_bound_elimination()}
    verdicts: List[BoxVerdict] = []
    for a1 in range(low, high + 1):
        for a2 in range(a1, high + 1):
            if a1 < 0:
                status = Status.by_rule(Rules.EFFECTIVE_C1, f"a1 = {a1}")
            elif a2 > AlphaBox.REGULARITY_BOUND:
                status = Status.by_rule(Rules.REGULARITY, f"a2 = {a2}")
            elif a1 >= 3:
                status = Status.by_rule(Rules.BOTH_LARGE, f"a1 = {a1}, a2 = {a2}")
            elif a2 >= 3:
                status = upper[(a1, a2)]
            else:
                status = Status.admissible("0 <= c1 <= 2h", Rules.IN_BOX)
            verdicts.append(BoxVerdict((a1, a2), status))
    return verdicts


def surviving_alphas(low: int = AlphaBox.LOW, high: int = AlphaBox.HIGH) -> List[Pair]:
    return [v.alpha for v in alpha_box(low, high) if v.status.is_admissible]


def nonempty_zero_locus_violations(bound: int = 6) -> List[Pair]:
    """
    c1 (triés) avec h^1(O(-c1)) != 0 pour lesquels l'extension
    0 -> O -> E -> O(c1) -> 0 ne serait pas détectée comme non aCM.

    Le twist E(-(2 + a1)h) a h^1 = h^1(O(-2h1 + (a2 - a1 - 2)h2)) ; la liste
    attendue est vide.
    """
    violations: List[Pair] = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(a1, bound + 1):
            if not cohom_f(-a1, -a2).dims[1]:
                continue
            if a2 < 2 or a1 + a2 > 1 or not cohom_f(-2, a2 - a1 - 2).dims[1]:
                violations.append((a1, a2))
    return violations
