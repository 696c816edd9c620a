"""
Statuts de résolution des candidats et règles citées qui les justifient.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from src.algebra.chern import Rank2Chern, ZeroLocusInvariants
from src.algebra.chow_ring import ChowClass, Variety

Pair = Tuple[int, int]


class StatusKind(Enum):
    ADMISSIBLE = "Admissible"
    NEGATIVE_INTERSECTION = "EliminatedNegativeIntersection"
    NO_INTEGER_SOLUTION = "EliminatedNoIntegerSolution"
    CITED_RULE = "EliminatedPaperRule"
    DECOMPOSABLE = "Decomposable"


@dataclass(frozen=True)
class CitedRule:
    """Résultat invoqué pour résoudre un candidat, avec sa phrase d'origine."""

    key: str
    citation: str
    anchor: str

    def __post_init__(self):
        if not self.citation.strip():
            raise ValueError(f"rule {self.key} needs a citation")
        if not self.anchor.strip():
            raise ValueError(f"rule {self.key} needs an anchor")


class Rules:
    """Registre des règles utilisées par le moteur."""

    # ---- F, partie divisorielle ----
    GLOBALLY_GENERATED = CitedRule(
        "globally-generated",
        "divisorial part of the zero locus on F",
        "the general section of E would vanish along a curve, contradicting the initial hypothesis",
    )
    NEGATIVE_INTERSECTION = CitedRule(
        "negative-intersection",
        "divisorial part of the zero locus on F",
        "we would have Eh2=−1, which is absurd, because the linear system |h2| is base-point-free",
    )
    KOSZUL_LINE = CitedRule(
        "koszul-line",
        "divisorial part of the zero locus on F, Koszul resolution",
        "It follows that I_{E|F}(h) is globally generated.",
    )

    # ---- F, cas c1 = 0 et cas intermédiaires ----
    LINE = CitedRule(
        "line",
        "bundles on F with c1 = 0",
        "c2=h2^2 up to permutation of the hi's",
    )
    INTERMEDIATE_LINE = CitedRule(
        "intermediate-line",
        "intermediate cases on F, c1 = h2",
        "if α1=0, α2=1, then E is a line, E≅p2^*Ω_{P2}^1(2h2) and each line on F can be obtained in such a way",
    )
    INTERMEDIATE_QUARTIC = CitedRule(
        "intermediate-quartic",
        "intermediate cases on F, c1 = h1 + 2h2",
        "if α1=1, α2=2, then E is a, possibly reducible, quartic with arithmetic genus 0 "
        "and E≅p1^*Ω_{P2}^1(2h1+h2)",
    )
    SPLITS_EQUAL_FACTORS = CitedRule(
        "split-equal-factors",
        "intermediate cases on F, case M",
        "we conclude that E≅O_F(h2)^{⊕2}",
    )
    SPLITS_BOTH_FACTORS = CitedRule(
        "split-both-factors",
        "intermediate cases on F, case P",
        "We infer that E=O_F(h1)⊕O_F(h2).",
    )
    DOUBLE_LINE = CitedRule(
        "double-line",
        "intermediate cases on F, case N",
        "in case P the bundle E exists but it is decomposable, in case N it does not exist at all",
    )

    # ---- F, c1 = 2h et bornes ----
    ELLIPTIC = CitedRule(
        "elliptic",
        "bundles on F with c1 = 2h",
        "c2 is either 3h2^2+5h1^2, or 4h2^2+4h1^2 up to permutation of the hi's",
    )
    ULRICH_BOUND = CitedRule(
        "ulrich-bound",
        "upper bound for c1 on F",
        "Moreover, if equality holds, then E is Ulrich",
    )
    CHI_DUAL_TWIST = CitedRule(
        "chi-dual-twist",
        "upper bound for c1 on F, regular case",
        "0=χ(E^∨(h))=12−3α1−3α2",
    )
    NO_INTEGER_BETA = CitedRule(
        "no-integer-beta",
        "upper bound for c1 on F, c1 = h1 + 3h2",
        "subtracting the two equation each other we obtain 2β2=5, a contradiction",
    )
    SPLITS_ON_FOUR_LINES = CitedRule(
        "four-lines",
        "upper bound for c1 on F, c1 = 4h2",
        "if c1 is 4h2, then E splits as sum of invertible sheaves, thus such a case cannot occur too",
    )
    EFFECTIVE_C1 = CitedRule(
        "effective-c1",
        "effectiveness of c1 on F",
        "We will now prove that c1−D is effective: hence the same holds for c1.",
    )
    REGULARITY = CitedRule(
        "regularity",
        "Castelnuovo-Mumford regularity on F",
        "It follows that 4h−c1=c1(E^∨(2h)) is effective on F, whence αi≤4.",
    )
    BOTH_LARGE = CitedRule(
        "both-large",
        "Castelnuovo-Mumford regularity on F",
        "if α1,α2≥3, then there would exists an injective morphism H^0(F,E(2h−c1))→H^0(F,E(−h))",
    )
    IN_BOX = CitedRule(
        "in-box",
        "upper bound for c1 on F",
        "If E is an indecomposable, initialized, aCM bundle of rank 2 on F, then 2h−c1≥0.",
    )

    # ---- Phi ----
    PLANE = CitedRule(
        "plane",
        "bundles on Phi with c1 = 0",
        "γ2=η2^2 up to permutation of the ηi's",
    )
    PHI_PLANE = CitedRule(
        "phi-plane",
        "intermediate cases on Phi, c1 = eta2",
        "if α1=0, α2=1, then Σ is a plane, G≅π2^*Ω_{P2}^1(2η2) and each plane on Φ can be obtained in such a way",
    )
    PHI_QUARTIC = CitedRule(
        "phi-quartic",
        "intermediate cases on Phi, c1 = eta1 + 2eta2",
        "if α1=1, α2=2, then Σ is a, possibly reducible, quartic surface and G≅π1^*Ω_{P2}^1(2η1+η2)",
    )
    DUAL_TWIST_ETA = CitedRule(
        "dual-twist-eta",
        "intermediate cases on Phi, cases Q' and Q''",
        "The computation of c2(G^∨(η)) shows that cases Q′ and Q″ cannot occur",
    )
    DEL_PEZZO = CitedRule(
        "del-pezzo",
        "del Pezzo surfaces of degree 8 on Phi",
        "It follows that μ1=1, μ2=3, μ3=2",
    )
    COMPLETE_INTERSECTION = CitedRule(
        "complete-intersection",
        "del Pezzo surfaces of degree 8 on Phi, quadric case",
        "G≅O_Φ(2η1)⊕O_Φ(2η2)",
    )
    HYPERPLANE = CitedRule(
        "hyperplane",
        "del Pezzo surfaces of degree 8 on Phi, quadric case",
        "Σ⊆im(ψ)⊆P8 is contained in a hyperplane too",
    )
    NO_SECTIONS_ON_CURVE = CitedRule(
        "base-points",
        "del Pezzo surfaces of degree 8 on Phi, F1 case",
        "which is absurd, because all such sections vanish identically on ℓ",
    )
    DEGENERATE_IMAGE = CitedRule(
        "degenerate-image",
        "del Pezzo surfaces of degree 8 on Phi",
        "Σ would be contained in a divisor of the linear system |η1|",
    )
    NO_EMBEDDING = CitedRule(
        "no-embedding",
        "del Pezzo surfaces of degree 8 on Phi",
        "Looking at the classification of del Pezzo surfaces we know that Σ is isomorphic to "
        "either Q:=P1×P1, or F1:=P(O_{P1}⊕O_{P1}(−1))",
    )

    @classmethod
    def all(cls) -> Tuple[CitedRule, ...]:
        return tuple(value for value in vars(cls).values() if isinstance(value, CitedRule))


@dataclass(frozen=True)
class Status:
    """Résolution d'un candidat ; chaque statut cite la règle qui le justifie."""

    kind: StatusKind
    detail: str = ""
    rule: Optional[CitedRule] = None

    def __post_init__(self):
        if self.rule is None:
            raise ValueError(f"a {self.kind.value} status needs its rule")

    @property
    def citation(self) -> str:
        return self.rule.citation

    @property
    def anchor(self) -> str:
        return self.rule.anchor

    @property
    def is_admissible(self) -> bool:
        return self.kind is StatusKind.ADMISSIBLE

    @classmethod
    def admissible(cls, witness: str, rule: CitedRule) -> "Status":
        return cls(StatusKind.ADMISSIBLE, witness, rule)

    @classmethod
    def negative(cls, detail: str, rule: CitedRule = Rules.NEGATIVE_INTERSECTION) -> "Status":
        return cls(StatusKind.NEGATIVE_INTERSECTION, detail, rule)

    @classmethod
    def no_integer_solution(cls, detail: str, rule: CitedRule) -> "Status":
        return cls(StatusKind.NO_INTEGER_SOLUTION, detail, rule)

    @classmethod
    def by_rule(cls, rule: CitedRule, detail: str = "") -> "Status":
        return cls(StatusKind.CITED_RULE, detail, rule)

    @classmethod
    def decomposable(cls, splitting: str, rule: CitedRule) -> "Status":
        return cls(StatusKind.DECOMPOSABLE, splitting, rule)

    def __str__(self) -> str:
        text = self.kind.value
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class ClassificationRow:
    """Un candidat (alpha, delta, e, hc2, c1c2, beta ou mu, [E]) et son statut."""

    variety: Variety
    alpha: Pair
    delta: Optional[Pair]
    e: int
    hc2: int
    c1c2: int
    coefficients: Tuple[int, ...]
    e_class: Optional[ChowClass]
    status: Status
    zero_locus: Optional[ZeroLocusInvariants] = None
    swapped: bool = False
    notes: Tuple[str, ...] = field(default=())

    @property
    def chern(self) -> Rank2Chern:
        if self.variety is Variety.F:
            return Rank2Chern.on_f(self.alpha, self.coefficients)
        return Rank2Chern.on_phi(self.alpha, self.coefficients)


# c1 symétriques dont le représentant met le plus petit coefficient en premier
SMALLER_FIRST_ALPHAS: Tuple[Pair, ...] = ((2, 2),)


def canonical_orbit(alpha: Pair, coefficients: Tuple[int, ...]) -> Tuple[Pair, Tuple[int, ...], bool]:
    """
    Représentant sous l'échange des facteurs : a1 <= a2 ; pour a1 = a2, le
    coefficient de h2^2 (resp. eta2^2) le plus grand en premier, sauf pour
    c1 = 2h où c2 s'écrit 3h2^2 + 5h1^2 et eta2^2 + 3eta1^2 + 2eta1*eta2.
    """
    swapped_alpha = (alpha[1], alpha[0])
    swapped_coeffs = (coefficients[1], coefficients[0]) + tuple(coefficients[2:])
    if alpha[0] > alpha[1]:
        return swapped_alpha, swapped_coeffs, True
    if alpha[0] == alpha[1]:
        if tuple(alpha) in SMALLER_FIRST_ALPHAS:
            out_of_order = coefficients[0] > coefficients[1]
        else:
            out_of_order = coefficients[0] < coefficients[1]
        if out_of_order:
            return swapped_alpha, swapped_coeffs, True
    return tuple(alpha), tuple(coefficients), False
