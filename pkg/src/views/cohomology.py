"""
Vue cohomologie : table(s) h^i d'un fibré en droites sur F ou Phi.
"""

import logging
from typing import Optional, Tuple

from src.algebra.chow_ring import Variety
from src.cohomology.line_bundles import cohom, cohom_with_twists
from src.errors import UnsupportedOperationError
from src.export.report_writer import writer
from src.export.schemas import CohomTableSchema

logger = logging.getLogger(__name__)


class CohomView:
    """Dimensions de cohomologie, éventuellement sur une plage de twists."""

    FORMATS = ("json", "csv", "markdown")

    def __init__(
        self,
        variety: Variety,
        a1: int,
        a2: int,
        fmt: Optional[str] = None,
        twist_range: Optional[Tuple[int, int]] = None,
    ):
        self.variety = variety
        self.a1 = a1
        self.a2 = a2
        self.fmt = fmt or self.FORMATS[0]
        self.twist_range = twist_range
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for cohom")
        self._load_data()

    def _load_data(self):
        if self.twist_range is None:
            self.tables = [cohom(self.variety, self.a1, self.a2)]
        else:
            low, high = self.twist_range
            self.tables = cohom_with_twists(self.variety, self.a1, self.a2, low, high)
        logger.debug("cohom %s (%d, %d) : %d table(s)", self.variety.value, self.a1, self.a2, len(self.tables))

    def build(self) -> str:
        schemas = [CohomTableSchema.from_table(t) for t in self.tables]
        payload = schemas[0] if self.twist_range is None else schemas
        title = f"Cohomology of O({self.a1}, {self.a2}) on {self.variety.value}"
        return writer.render(payload, self.fmt, title)
