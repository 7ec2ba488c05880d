"""
Almost Invariant Colorings
==========================

Structured colorings of torus curves: construction with 2^k colors, exact
defect sets, brute-force ball checks, simplification, equivalence and the
canonical normal form.

Usage:
    from mcg_colorings.colorings import construct, defect

    c = construct(1, ["red", "blue"])
    defect(c, "S").defect   # (1/2, -2/1)
"""

from .classify import (
    EquivalenceResult,
    binarize,
    equivalent,
    is_trivial,
    minority_bound,
    normalize,
    r_invariantify,
    refine,
    simplify,
)
from .defects import GENERATORS, BallReport, DefectReport, defect, defect_candidates, verify_ball
from .documents import (
    claims_from_dict,
    coloring_from_dict,
    coloring_to_dict,
    dumps_coloring,
    load_coloring_document,
    loads_coloring,
)
from .structured import (
    Color,
    StructuredColoring,
    color_of,
    construct,
    shallow_vertices,
    structural_color,
)

__all__ = [
    "Color", "StructuredColoring", "construct", "color_of", "structural_color",
    "shallow_vertices", "DefectReport", "BallReport", "GENERATORS", "defect",
    "defect_candidates", "verify_ball", "simplify", "binarize", "is_trivial",
    "minority_bound", "refine", "equivalent", "EquivalenceResult", "r_invariantify",
    "normalize", "coloring_to_dict", "coloring_from_dict", "claims_from_dict",
    "dumps_coloring", "loads_coloring", "load_coloring_document",
]
