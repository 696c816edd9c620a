"""
Vue tables : chaque table du moteur de classification, statuts et
citations compris.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from src.algebra.chow_ring import Variety
from src.classification.bounds import alpha_box, upper_bound_elimination
from src.classification.engine import (
    INTERMEDIATE_ALPHAS,
    ULRICH_ALPHA,
    divisorial_table,
    intermediate_table_f,
    ulrich_table_f,
    vanishing_search,
)
from src.classification.final import final_classification
from src.classification.phi import Surface, classify_phi, del_pezzo_embeddings
from src.cohomology.line_bundles import cohom_f, line_bundle_census
from src.errors import UnsupportedOperationError
from src.export.report_writer import writer
from src.export.schemas import (
    BoxVerdictSchema,
    CandidateSchema,
    CensusSchema,
    FinalEntrySchema,
    RowSchema,
    VanishingHitSchema,
)

logger = logging.getLogger(__name__)

CENSUS_BOUND = 6


def _rows(rows) -> List[BaseModel]:
    return [RowSchema.from_row(row) for row in rows]


def _phi_rows(alphas) -> List[BaseModel]:
    return _rows(row for row in classify_phi() if row.alpha in alphas)


def _embeddings() -> List[BaseModel]:
    return [
        CandidateSchema.from_candidate(candidate)
        for surface in Surface
        for candidate in del_pezzo_embeddings(surface)
    ]


def _vanishing_hits() -> List[BaseModel]:
    return [
        VanishingHitSchema(
            a2=a2, b1=b1, b2=b2, t=t, h1=cohom_f(t + b1, t + b2 - a2).dims[1]
        )
        for a2, b1, b2, t in sorted(vanishing_search())
    ]


def _census(variety: Variety) -> List[BaseModel]:
    initialized, ulrich = line_bundle_census(variety, CENSUS_BOUND)
    return [
        CensusSchema(variety=variety.value, bundle=list(pair), initialized_acm=True, ulrich=pair in ulrich)
        for pair in initialized
    ]


# nom -> (titre, producteur)
TABLES: Dict[str, Tuple[str, Callable[[], List[BaseModel]]]] = {
    "section4": ("Candidates with a divisorial part", lambda: _rows(divisorial_table())),
    "intermediateF": ("Intermediate cases on F", lambda: _rows(intermediate_table_f())),
    "intermediatePhi": ("Intermediate cases on Phi", lambda: _phi_rows(((0, 0),) + INTERMEDIATE_ALPHAS)),
    "ulrichF": ("Ulrich cases on F", lambda: _rows(ulrich_table_f())),
    "ulrichPhi": ("Ulrich cases on Phi", lambda: _phi_rows((ULRICH_ALPHA,))),
    "embeddings": ("Degree-8 del Pezzo embeddings", _embeddings),
    "theoremB-F": (
        "Indecomposable initialized aCM bundles of rank 2 on F",
        lambda: [FinalEntrySchema.from_entry(e) for e in final_classification(Variety.F)],
    ),
    "theoremB-Phi": (
        "Indecomposable initialized aCM bundles of rank 2 on Phi",
        lambda: [FinalEntrySchema.from_entry(e) for e in final_classification(Variety.PHI)],
    ),
    "upperBound": ("Regular candidates with a2 >= 3", lambda: _rows(upper_bound_elimination())),
    "vanishingSearch": ("Nonvanishing h^1 on negative twists", _vanishing_hits),
    "alphaBox": ("First Chern classes in the search box", lambda: [BoxVerdictSchema.from_verdict(v) for v in alpha_box()]),
    "censusF": ("Initialized aCM line bundles on F", lambda: _census(Variety.F)),
    "censusPhi": ("Initialized aCM line bundles on Phi", lambda: _census(Variety.PHI)),
}


class TableView:
    FORMATS = ("markdown", "json", "csv")

    def __init__(self, name: str, fmt: Optional[str] = None):
        if name not in TABLES:
            raise UnsupportedOperationError(
                f"unknown table {name!r} (expected one of {', '.join(TABLES)})"
            )
        self.fmt = fmt or self.FORMATS[0]
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for table")
        self.name = name
        self._load_data()

    def _load_data(self):
        self.title, producer = TABLES[self.name]
        self.payload = producer()
        logger.info("Table %s : %d lignes", self.name, len(self.payload))

    def build(self) -> str:
        return writer.render(self.payload, self.fmt, self.title)
