"""
Vue Chow : normalisation d'une expression polynomiale en h1, h2 (ou eta1, eta2).
"""

from typing import Optional

from src.algebra.chow_ring import Variety, parse
from src.errors import UnsupportedOperationError
from src.export.report_writer import writer
from src.export.schemas import ChowClassSchema


class ChowView:
    FORMATS = ("json", "markdown")

    def __init__(self, variety: Variety, expression: str, fmt: Optional[str] = None):
        self.fmt = fmt or self.FORMATS[0]
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for chow")
        self.expression = expression
        self.value = parse(expression, variety)

    def build(self) -> str:
        schema = ChowClassSchema.from_class(self.value)
        if self.fmt == "json":
            return writer.to_json(schema)
        lines = [f"## {self.expression} on {self.value.variety.value}", "", f"= {self.value}", ""]
        lines += [f"- {term.monomial}: {term.coeff}" for term in schema.terms]
        return "\n".join(lines) + "\n"
