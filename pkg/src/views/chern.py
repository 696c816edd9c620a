"""
Vue Chern : chi, lieu des zéros et E^v(h) pour des données (c1, c2) données.
"""

import logging
from typing import Optional, Sequence

from src.algebra.chern import Rank2Chern
from src.algebra.chow_ring import Variety
from src.errors import UnsupportedOperationError
from src.export.report_writer import writer
from src.export.schemas import ChernReportSchema

logger = logging.getLogger(__name__)


class ChernView:
    """c2 se donne par beta (2 entiers) sur F, par mu (3 entiers) sur Phi."""

    FORMATS = ("json", "markdown")

    def __init__(self, variety: Variety, a1: int, a2: int, coefficients: Sequence[int], fmt: Optional[str] = None):
        self.fmt = fmt or self.FORMATS[0]
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for chern")
        expected = 2 if variety is Variety.F else 3
        if len(coefficients) != expected:
            raise UnsupportedOperationError(
                f"c2 on {variety.value} takes {expected} coefficients, got {len(coefficients)}"
            )
        if variety is Variety.F:
            self.chern = Rank2Chern.on_f((a1, a2), tuple(coefficients))
        else:
            self.chern = Rank2Chern.on_phi((a1, a2), tuple(coefficients))

    def build(self) -> str:
        report = ChernReportSchema.from_chern(self.chern)
        if self.fmt == "json":
            return writer.to_json(report)
        genus = "" if report.arithmetic_genus is None else f", p_a = {report.arithmetic_genus}"
        dual = report.dual_twist
        lines = [
            f"## {self.chern}",
            "",
            f"- chi: {'n/a' if report.chi is None else report.chi}",
            f"- zero locus: degree {report.degree}{genus}",
            f"- dual twist: c1 = {tuple(dual.c1)}, c2 = {dual.c2}",
        ]
        return "\n".join(lines) + "\n"
