"""
Classification sur Phi = P2 x P2.

Chaque cas admissible de F se relève en (mu1, mu2, mu3) >= 0 de même
restriction ; les relèvements sont filtrés par E -> E^v(eta) et, pour
c1 = 2eta, par l'énumération des plongements des surfaces de del Pezzo de
degré 8 (F1 et la quadrique Q).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from src.algebra.chern import Rank2Chern, dual_twist_eta, restrict_chern, zero_locus_invariants
from src.algebra.chow_ring import Variety
from src.classification.engine import (
    intermediate_table_f,
    line_table_f,
    ulrich_kernel,
    ulrich_table_f,
)
from src.classification.status import (
    ClassificationRow,
    Rules,
    Status,
    StatusKind,
    canonical_orbit,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Mu = Tuple[int, int, int]


class Surface(Enum):
    F1 = "F1"
    Q = "Q"

    @classmethod
    def parse(cls, name: str) -> "Surface":
        for surface in cls:
            if surface.value.lower() == name.lower():
                return surface
        raise ValueError(f"unknown surface {name!r} (expected F1 or Q)")


@dataclass(frozen=True)
class EmbeddingCandidate:
    """Plongement d'une surface de degré 8 par (a1 l + b1 m, a2 l + b2 m)."""

    surface: Surface
    a: Pair
    b: Pair
    mu: Mu
    status: Status


# ==================== PLONGEMENTS ====================


def embedding_mu(surface: Surface, a: Pair, b: Pair) -> Mu:
    """Degrés de eta1^2, eta2^2 et eta1*eta2 sur la surface."""
    a1, a2 = a
    b1, b2 = b
    if surface is Surface.F1:
        # l^2 = -1, l.m = 1, m^2 = 0
        return (a1 * (2 * b1 - a1), a2 * (2 * b2 - a2), -a1 * a2 + a1 * b2 + a2 * b1)
    # l^2 = m^2 = 0, l.m = 1
    return (2 * a1 * b1, 2 * a2 * b2, a1 * b2 + a2 * b1)


def _degenerate_pairs(surface: Surface) -> Tuple[Pair, ...]:
    if surface is Surface.F1:
        # un point, ou la droite m sur P2
        return ((0, 0), (0, 1))
    return ((0, 0), (0, 1), (1, 0))


def _embedding_status(surface: Surface, a: Pair, b: Pair, mu: Mu) -> Status:
    if surface is Surface.F1 and any(b[i] < a[i] for i in range(2)):
        return Status.by_rule(Rules.NO_SECTIONS_ON_CURVE, f"b = {b} < a = {a}")
    for i in range(2):
        if (a[i], b[i]) in _degenerate_pairs(surface):
            return Status.by_rule(Rules.DEGENERATE_IMAGE, f"phi{i + 1} given by ({a[i]}, {b[i]})")
    if surface is Surface.Q and mu == (0, 0, 4):
        return Status.decomposable("O(2eta1) + O(2eta2)", Rules.COMPLETE_INTERSECTION)
    if surface is Surface.Q and a == b == (1, 1):
        return Status.by_rule(Rules.HYPERPLANE, "a = b = (1, 1)")
    return Status.admissible(f"zero locus {surface.value} embedded by a = {a}, b = {b}", Rules.DEL_PEZZO)


def del_pezzo_embeddings(surface: Surface) -> List[EmbeddingCandidate]:
    """Toutes les données (a, b) >= 0 de degré 8 sur la surface donnée."""
    b_total = 3 if surface is Surface.F1 else 2
    candidates = []
    for a1 in range(0, 3):
        for b1 in range(0, b_total + 1):
            a, b = (a1, 2 - a1), (b1, b_total - b1)
            mu = embedding_mu(surface, a, b)
            status = _embedding_status(surface, a, b, mu)
            logger.debug("%s a=%s b=%s mu=%s : %s", surface.value, a, b, mu, status)
            candidates.append(EmbeddingCandidate(surface, a, b, mu, status))
    return candidates


# ==================== RELEVEMENTS ====================


def lifts(beta: Pair) -> List[Mu]:
    """(mu1, mu2, mu3) >= 0 avec mu1 + mu3 = beta1, mu2 + mu3 = beta2."""
    return [(beta[0] - m3, beta[1] - m3, m3) for m3 in range(0, min(beta) + 1)]


def _negative_part(chern: Rank2Chern) -> str:
    image = dual_twist_eta(chern)
    if all(c >= 0 for _, c in image.c2.terms):
        return ""
    return f"c2(G^v(eta)) = {image.c2}"


def _intermediate_status(alpha: Pair, chern: Rank2Chern) -> Status:
    negative = _negative_part(chern)
    if negative:
        return Status.negative(negative, Rules.DUAL_TWIST_ETA)
    if alpha == (0, 1):
        return Status.admissible("pi2^*Omega(2eta2), zero locus a plane", Rules.PHI_PLANE)
    return Status.admissible("pi1^*Omega(2eta1+eta2), zero locus a quartic surface", Rules.PHI_QUARTIC)


def _priority(status: Status) -> int:
    if status.is_admissible:
        return 0
    return 1 if status.kind is StatusKind.DECOMPOSABLE else 2


def _ulrich_statuses() -> Dict[Mu, Status]:
    """Meilleur statut atteint par chaque mu sur F1 ou Q."""
    statuses: Dict[Mu, Status] = {}
    for surface in Surface:
        for candidate in del_pezzo_embeddings(surface):
            current = statuses.get(candidate.mu)
            if current is None or _priority(candidate.status) < _priority(current):
                statuses[candidate.mu] = candidate.status
    return statuses


def _ulrich_status(chern: Rank2Chern, embedded: Dict[Mu, Status]) -> Status:
    status = embedded.get(chern.mu)
    if status is None:
        return Status.by_rule(Rules.NO_EMBEDDING, f"mu = {chern.mu}")
    if not status.is_admissible:
        return status
    kernel = ulrich_kernel(restrict_chern(chern).beta)
    if kernel is None or kernel.c2 != chern.c2:
        raise AssertionError(f"no kernel bundle for mu = {chern.mu}")
    return Status.admissible(f"kernel bundle with c2 = {kernel.c2}; {status.detail}", status.rule)


def _phi_row(source: ClassificationRow, mu: Mu, status: Status) -> ClassificationRow:
    chern = Rank2Chern.on_phi(source.alpha, mu)
    return ClassificationRow(
        variety=Variety.PHI,
        alpha=source.alpha,
        delta=None,
        e=source.e,
        hc2=source.hc2,
        c1c2=source.c1c2,
        coefficients=mu,
        e_class=None,
        status=status,
        zero_locus=zero_locus_invariants(chern),
    )


def classify_phi() -> List[ClassificationRow]:
    """
    Relèvements des cas admissibles de F (droite, cas intermédiaires
    admissibles, cas Ulrich), un représentant par orbite.
    """
    sources = [
        row
        for row in line_table_f() + intermediate_table_f() + ulrich_table_f()
        if row.status.is_admissible
    ]
    embedded = _ulrich_statuses()
    rows: List[ClassificationRow] = []
    for source in sources:
        for mu in lifts(source.coefficients):
            if canonical_orbit(source.alpha, mu)[2]:
                continue
            chern = Rank2Chern.on_phi(source.alpha, mu)
            if restrict_chern(chern).beta != source.coefficients:
                raise AssertionError(f"lift {mu} does not restrict to {source.coefficients}")
            if source.alpha == (0, 0):
                status = Status.admissible("zero locus a plane", Rules.PLANE)
            elif source.alpha == (2, 2):
                status = _ulrich_status(chern, embedded)
            else:
                status = _intermediate_status(source.alpha, chern)
            rows.append(_phi_row(source, mu, status))
    logger.info("Classification sur Phi : %d lignes", len(rows))
    return rows
