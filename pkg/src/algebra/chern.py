"""
Données de Chern des fibrés de rang 2 sur F et Phi.

Twist, dual, caractéristique d'Euler par Riemann-Roch sur F, système
d'identités (c1c2) / (hc2) et invariants numériques du lieu des zéros.
"""

import logging
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Sequence, Tuple

from src.algebra.chow_ring import (
    ChowClass,
    DivisorClass,
    Variety,
    beta as beta_of,
    degree,
    f_codim2,
    hyperplane,
    mu as mu_of,
    omega2,
    phi_codim2,
    restrict,
    zero,
)
from src.errors import (
    CodimensionError,
    IntegralityError,
    UnsupportedOperationError,
    VarietyMismatchError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rank2Chern:
    """Couple (c1, c2) d'un fibré de rang 2."""

    variety: Variety
    c1: DivisorClass
    c2: ChowClass

    def __post_init__(self):
        if self.c1.variety is not self.variety or self.c2.variety is not self.variety:
            raise VarietyMismatchError("c1 and c2 must live on the same variety")
        if not self.c2.is_zero and self.c2.codimension != 2:
            raise CodimensionError(f"c2 must have codimension 2, got {self.c2}")

    @classmethod
    def on_f(cls, alpha: Tuple[int, int], beta: Tuple[int, int]) -> "Rank2Chern":
        """c1 = a1*h1 + a2*h2, c2 = b1*h2^2 + b2*h1^2."""
        return cls(Variety.F, DivisorClass(Variety.F, *alpha), f_codim2(beta))

    @classmethod
    def on_phi(cls, alpha: Tuple[int, int], mu: Tuple[int, int, int]) -> "Rank2Chern":
        """c1 = a1*eta1 + a2*eta2, c2 = m1*eta2^2 + m2*eta1^2 + m3*eta1*eta2."""
        return cls(Variety.PHI, DivisorClass(Variety.PHI, *alpha), phi_codim2(mu))

    @property
    def alpha(self) -> Tuple[int, int]:
        return self.c1.pair

    @property
    def beta(self) -> Tuple[int, int]:
        return beta_of(self.c2)

    @property
    def mu(self) -> Tuple[int, int, int]:
        return mu_of(self.c2)

    def __str__(self) -> str:
        return f"c1 = {self.c1}, c2 = {self.c2}"


@dataclass(frozen=True)
class ZeroLocusInvariants:
    """Degré (et genre arithmétique sur F) du lieu des zéros d'une section."""

    degree: int
    arithmetic_genus: Optional[int] = None


class IdentityResiduals(NamedTuple):
    c1c2: int
    hc2: int


# ==================== TWISTS ====================


def twist(x: Rank2Chern, line: DivisorClass) -> Rank2Chern:
    """E -> E(L) : c1 + 2L, c2 + c1*L + L^2."""
    if line.variety is not x.variety:
        raise VarietyMismatchError("twist by a divisor of another variety")
    c1_chow = x.c1.to_chow()
    line_chow = line.to_chow()
    return Rank2Chern(
        x.variety,
        x.c1 + line * 2,
        x.c2 + c1_chow * line_chow + line_chow * line_chow,
    )


def dual(x: Rank2Chern) -> Rank2Chern:
    return Rank2Chern(x.variety, -x.c1, x.c2)


def dual_twist_h(x: Rank2Chern) -> Rank2Chern:
    """E -> E^v(h) sur F."""
    if x.variety is not Variety.F:
        raise UnsupportedOperationError("dual_twist_h is defined on F")
    return twist(dual(x), hyperplane(Variety.F))


def dual_twist_eta(x: Rank2Chern) -> Rank2Chern:
    """G -> G^v(eta) sur Phi."""
    if x.variety is not Variety.PHI:
        raise UnsupportedOperationError("dual_twist_eta is defined on Phi")
    return twist(dual(x), hyperplane(Variety.PHI))


def dual_twist_h_closed_form(
    alpha: Tuple[int, int], beta: Tuple[int, int]
) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Formules fermées de (c1, c2) de E^v(h), en coordonnées (alpha, beta)."""
    a1, a2 = alpha
    b1, b2 = beta
    # coefficient de h1^2 -> beta2', coefficient de h2^2 -> beta1'
    return (2 - a1, 2 - a2), (b1 - a1 - 2 * a2 + 3, b2 - 2 * a1 - a2 + 3)


def restrict_chern(x: Rank2Chern) -> Rank2Chern:
    """Restriction Phi -> F des données de Chern."""
    if x.variety is not Variety.PHI:
        raise VarietyMismatchError("restriction goes from Phi to F")
    return Rank2Chern(Variety.F, x.c1.restrict(), restrict(x.c2))


def decomposable(first: DivisorClass, second: DivisorClass) -> Rank2Chern:
    """Données de Chern de O(first) + O(second)."""
    return Rank2Chern(first.variety, first + second, first * second)


def rank2_kernel(sources: Sequence[DivisorClass], targets: Sequence[DivisorClass]) -> Rank2Chern:
    """
    Données de Chern du noyau G de 0 -> G -> sum O(a_i) -> sum O(b_j) -> 0.

    c(G) = prod(1 + a_i) / prod(1 + b_j), tronqué en codimension 2.
    """
    if len(sources) - len(targets) != 2:
        raise UnsupportedOperationError(
            f"kernel of rank {len(sources) - len(targets)}, expected 2"
        )
    variety = (sources[0] if sources else targets[0]).variety
    if any(d.variety is not variety for d in (*sources, *targets)):
        raise VarietyMismatchError("kernel data on mixed varieties")

    def symmetric(divisors):
        e1 = DivisorClass(variety, 0, 0)
        e2 = zero(variety)
        for d in divisors:
            e2 = e2 + e1 * d
            e1 = e1 + d
        return e1, e2

    a1, a2 = symmetric(sources)
    b1, b2 = symmetric(targets)
    return Rank2Chern(variety, a1 - b1, a2 - a1 * b1 + (b1 * b1 - b2))


# ==================== RIEMANN-ROCH ====================


@dataclass(frozen=True)
class ChernNumbers:
    """Nombres d'intersection qui entrent dans chi(E) sur F."""

    c1_cubed: Any
    c1_c2: Any
    c1sq_h: Any
    c2_h: Any
    c1_hsq: Any
    omega2_c1: Any

    @classmethod
    def of(cls, x: Rank2Chern) -> "ChernNumbers":
        """Calcul dans l'anneau de Chow."""
        if x.variety is not Variety.F:
            raise UnsupportedOperationError("Riemann-Roch is only provided on F")
        c1 = x.c1.to_chow()
        h = hyperplane(Variety.F).to_chow()
        c1_sq = c1 * c1
        return cls(
            c1_cubed=degree(c1_sq * c1),
            c1_c2=degree(c1 * x.c2),
            c1sq_h=degree(c1_sq * h),
            c2_h=degree(x.c2 * h),
            c1_hsq=degree(c1 * (h * h)),
            omega2_c1=degree(omega2() * c1),
        )

    @classmethod
    def closed_form(cls, alpha, beta) -> "ChernNumbers":
        """Formules fermées ; marche aussi avec des symboles sympy."""
        a1, a2 = alpha
        b1, b2 = beta
        return cls(
            c1_cubed=3 * (a1**2 * a2 + a1 * a2**2),
            c1_c2=a1 * b1 + a2 * b2,
            c1sq_h=a1**2 + 4 * a1 * a2 + a2**2,
            c2_h=b1 + b2,
            c1_hsq=3 * (a1 + a2),
            omega2_c1=6 * (a1 + a2),
        )


class RiemannRoch:
    """chi(E) = 2 + (c1^3 - 3c1c2)/6 + (c1^2h - 2c2h)/2 + (4c1h^2 + w2c1)/12."""

    # +1 : seul signe compatible avec chi(O(h1) + O) = 4.
    QUADRATIC_SIGN = 1

    @classmethod
    def twelve_chi(cls, numbers: ChernNumbers):
        return (
            24
            + 2 * (numbers.c1_cubed - 3 * numbers.c1_c2)
            + cls.QUADRATIC_SIGN * 6 * (numbers.c1sq_h - 2 * numbers.c2_h)
            + 4 * numbers.c1_hsq
            + numbers.omega2_c1
        )


def chi_f(x: Rank2Chern) -> int:
    """Caractéristique d'Euler d'un fibré de rang 2 sur F."""
    twelve = RiemannRoch.twelve_chi(ChernNumbers.of(x))
    value, rest = divmod(twelve, 12)
    if rest:
        raise IntegralityError(f"non-integral Euler characteristic {twelve}/12 for {x}")
    return value


# ==================== LIEU DES ZEROS ====================


def zero_locus_invariants(x: Rank2Chern) -> ZeroLocusInvariants:
    """deg = h*c2 et p_a = c1c2/2 - hc2 + 1 sur F ; degré eta^2*c2 sur Phi."""
    h = hyperplane(x.variety).to_chow()
    if x.variety is Variety.PHI:
        return ZeroLocusInvariants(degree=degree(h * h * x.c2))
    deg = degree(h * x.c2)
    return ZeroLocusInvariants(degree=deg, arithmetic_genus=arithmetic_genus(x))


def arithmetic_genus(x: Rank2Chern) -> int:
    if x.variety is not Variety.F:
        raise UnsupportedOperationError("arithmetic genus is only defined for curves on F")
    twice = degree(x.c1.to_chow() * x.c2)
    if twice % 2:
        raise IntegralityError(f"odd c1*c2 = {twice} for {x}")
    return twice // 2 - degree(hyperplane(Variety.F).to_chow() * x.c2) + 1


# ==================== SYSTEME D'IDENTITES ====================


def e_indicator(alpha: Tuple[int, int], delta: Tuple[int, int]) -> int:
    """1 si la partie divisorielle D vaut c1, 0 sinon."""
    return 1 if tuple(delta) == tuple(alpha) else 0


def expected_hc2(alpha: Tuple[int, int], e: int) -> int:
    a1, a2 = alpha
    quad = a1 * a1 + 4 * a1 * a2 + a2 * a2 - 3 * a1 - 3 * a2
    return 2 + quad // 2 - e


def expected_c1c2(alpha: Tuple[int, int]) -> int:
    a1, a2 = alpha
    return a1 * a1 * a2 + a1 * a2 * a2


def identity_ledger(c1: DivisorClass, beta: Tuple[int, int], e: int) -> IdentityResiduals:
    """
    Résidus (gauche - droite) des deux identités, calculés dans l'anneau :

        deg(c1*c2) = deg(c1^3) / 3
        deg(h*c2)  = 2 + (deg(c1^2*h) - deg(c1*h^2)) / 2 - e
    """
    if c1.variety is not Variety.F:
        raise UnsupportedOperationError("the identity system lives on F")
    c2 = f_codim2(beta)
    chow_c1 = c1.to_chow()
    h = hyperplane(Variety.F).to_chow()
    cube = degree(chow_c1 * chow_c1 * chow_c1)
    quad = degree(chow_c1 * chow_c1 * h) - degree(chow_c1 * h * h)
    if cube % 3 or quad % 2:
        raise IntegralityError(f"identity system not integral for c1 = {c1}")
    return IdentityResiduals(
        c1c2=degree(chow_c1 * c2) - cube // 3,
        hc2=degree(h * c2) - (2 + quad // 2 - e),
    )
