"""Module d'algèbre : anneaux de Chow et données de Chern de rang 2."""

from .chow_ring import ChowClass, DivisorClass, Variety, chow_ring, normalize, mul, degree, restrict
from .chern import Rank2Chern, ZeroLocusInvariants, chi_f, dual, rank2_kernel, twist

__all__ = [
    "ChowClass",
    "DivisorClass",
    "Variety",
    "chow_ring",
    "normalize",
    "mul",
    "degree",
    "restrict",
    "Rank2Chern",
    "ZeroLocusInvariants",
    "chi_f",
    "dual",
    "rank2_kernel",
    "twist",
]
