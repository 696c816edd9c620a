"""Module de cohomologie des fibrés en droites."""

from .line_bundles import (
    CohomTable,
    LineBundleReport,
    classify_line_bundle,
    cohom,
    cohom_f,
    cohom_p2,
    cohom_phi,
    euler_line,
    module_nonvanishing,
)
from .regions import RegionLabel, region_label

__all__ = [
    "CohomTable",
    "LineBundleReport",
    "classify_line_bundle",
    "cohom",
    "cohom_f",
    "cohom_p2",
    "cohom_phi",
    "euler_line",
    "module_nonvanishing",
    "RegionLabel",
    "region_label",
]
