"""
Schémas pydantic des sorties ; l'ordre des champs fixe l'ordre des clés JSON
et des colonnes CSV/Markdown.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel

from src.algebra.chern import Rank2Chern, chi_f, dual_twist_eta, dual_twist_h, zero_locus_invariants
from src.algebra.chow_ring import ChowClass, Variety
from src.classification.bounds import BoxVerdict
from src.classification.final import FinalEntry
from src.classification.phi import EmbeddingCandidate
from src.classification.status import ClassificationRow, Status
from src.cohomology.line_bundles import CohomTable


class TermSchema(BaseModel):
    monomial: str
    coeff: int


class ChowClassSchema(BaseModel):
    variety: str
    terms: List[TermSchema]

    @classmethod
    def from_class(cls, x: ChowClass) -> "ChowClassSchema":
        return cls(
            variety=x.variety.value,
            terms=[TermSchema(monomial=name, coeff=c) for name, c in x.named_terms()],
        )


class CohomTableSchema(BaseModel):
    variety: str
    bundle: List[int]
    h: List[int]

    @classmethod
    def from_table(cls, table: CohomTable) -> "CohomTableSchema":
        return cls(variety=table.variety, bundle=list(table.bundle), h=list(table.dims))


class Rank2ChernSchema(BaseModel):
    variety: str
    c1: List[int]
    c2: Dict[str, int]

    @classmethod
    def from_chern(cls, x: Rank2Chern) -> "Rank2ChernSchema":
        return cls(variety=x.variety.value, c1=list(x.alpha), c2=dict(x.c2.named_terms()))


class ChernReportSchema(BaseModel):
    """Réponse de la commande chern."""

    chern: Rank2ChernSchema
    chi: Optional[int]
    degree: int
    arithmetic_genus: Optional[int]
    dual_twist: Rank2ChernSchema

    @classmethod
    def from_chern(cls, x: Rank2Chern) -> "ChernReportSchema":
        invariants = zero_locus_invariants(x)
        on_f = x.variety is Variety.F
        return cls(
            chern=Rank2ChernSchema.from_chern(x),
            chi=chi_f(x) if on_f else None,
            degree=invariants.degree,
            arithmetic_genus=invariants.arithmetic_genus,
            dual_twist=Rank2ChernSchema.from_chern(dual_twist_h(x) if on_f else dual_twist_eta(x)),
        )


class StatusSchema(BaseModel):
    kind: str
    detail: str
    citation: str
    anchor: str

    @classmethod
    def from_status(cls, status: Status) -> "StatusSchema":
        return cls(
            kind=status.kind.value,
            detail=status.detail,
            citation=status.citation,
            anchor=status.anchor,
        )


class RowSchema(BaseModel):
    variety: str
    alpha: List[int]
    delta: Optional[List[int]]
    e: int
    hc2: int
    c1c2: int
    coefficients: List[int]
    c2: str
    e_class: Optional[str]
    degree: Optional[int]
    arithmetic_genus: Optional[int]
    status: StatusSchema
    notes: List[str]

    @classmethod
    def from_row(cls, row: ClassificationRow) -> "RowSchema":
        locus = row.zero_locus
        return cls(
            variety=row.variety.value,
            alpha=list(row.alpha),
            delta=list(row.delta) if row.delta is not None else None,
            e=row.e,
            hc2=row.hc2,
            c1c2=row.c1c2,
            coefficients=list(row.coefficients),
            c2=str(row.chern.c2) if row.coefficients else "",
            e_class=str(row.e_class) if row.e_class is not None else None,
            degree=locus.degree if locus else None,
            arithmetic_genus=locus.arithmetic_genus if locus else None,
            status=StatusSchema.from_status(row.status),
            notes=list(row.notes),
        )


class CandidateSchema(BaseModel):
    surface: str
    a: List[int]
    b: List[int]
    mu: List[int]
    status: StatusSchema

    @classmethod
    def from_candidate(cls, candidate: EmbeddingCandidate) -> "CandidateSchema":
        return cls(
            surface=candidate.surface.value,
            a=list(candidate.a),
            b=list(candidate.b),
            mu=list(candidate.mu),
            status=StatusSchema.from_status(candidate.status),
        )


class FinalEntrySchema(BaseModel):
    variety: str
    alpha: List[int]
    c2: List[str]
    zero_locus: str
    degree: int
    arithmetic_genus: Optional[int]
    is_ulrich: bool
    witnesses: List[str]

    @classmethod
    def from_entry(cls, entry: FinalEntry) -> "FinalEntrySchema":
        return cls(
            variety=entry.variety.value,
            alpha=list(entry.alpha),
            c2=list(entry.c2),
            zero_locus=entry.zero_locus,
            degree=entry.degree,
            arithmetic_genus=entry.arithmetic_genus,
            is_ulrich=entry.is_ulrich,
            witnesses=list(entry.witnesses),
        )


class BoxVerdictSchema(BaseModel):
    alpha: List[int]
    status: StatusSchema

    @classmethod
    def from_verdict(cls, verdict: BoxVerdict) -> "BoxVerdictSchema":
        return cls(alpha=list(verdict.alpha), status=StatusSchema.from_status(verdict.status))


class VanishingHitSchema(BaseModel):
    a2: int
    b1: int
    b2: int
    t: int
    h1: int


class CensusSchema(BaseModel):
    variety: str
    bundle: List[int]
    initialized_acm: bool
    ulrich: bool


class CheckSchema(BaseModel):
    name: str
    scope: str
    passed: bool
    detail: str


class VerifyReportSchema(BaseModel):
    overall: bool
    checks: List[CheckSchema]
