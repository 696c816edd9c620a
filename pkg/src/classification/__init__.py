"""Moteur de classification des fibrés aCM de rang 2."""

from .bounds import alpha_box, chi_dual_twist_polynomial, upper_bound_elimination
from .engine import (
    divisorial_table,
    intermediate_table_f,
    solve_beta,
    ulrich_beta_f,
    vanishing_search,
)
from .final import FinalEntry, final_classification
from .phi import EmbeddingCandidate, Surface, classify_phi, del_pezzo_embeddings
from .status import ClassificationRow, CitedRule, Status, StatusKind

__all__ = [
    "alpha_box",
    "chi_dual_twist_polynomial",
    "upper_bound_elimination",
    "divisorial_table",
    "intermediate_table_f",
    "solve_beta",
    "ulrich_beta_f",
    "vanishing_search",
    "FinalEntry",
    "final_classification",
    "EmbeddingCandidate",
    "Surface",
    "classify_phi",
    "del_pezzo_embeddings",
    "ClassificationRow",
    "CitedRule",
    "Status",
    "StatusKind",
]
