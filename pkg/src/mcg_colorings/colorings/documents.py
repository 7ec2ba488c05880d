"""
JSON documents for structured colorings.

{"level": k, "anchors": {"11": "red", ...}, "exceptions": {"1/1": "red", "1/0": "blue", ...},
 "overrides": {"7/5": "blue"}, "claims": {"S": ["1/2", "-2/1"], "R": []}}

"claims" is optional and declares the defect sets a document expects;
it is read by verification and is not part of the coloring itself.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..errors import DocumentError
from ..formats import parse_json, read_source, require_object, to_json
from ..torus.lattice import TorusCurve, parse_curve
from .defects import GENERATORS
from .structured import StructuredColoring

_FIELDS = {"level", "anchors", "exceptions", "overrides", "claims"}
_REQUIRED = {"level", "anchors", "exceptions"}


def _curve_map(data, what: str) -> Dict[TorusCurve, str]:
    if not isinstance(data, dict):
        raise DocumentError(f"{what} must be an object keyed by p/q")
    result: Dict[TorusCurve, str] = {}
    for key, color in data.items():
        curve = parse_curve(key)
        if curve in result:
            raise DocumentError(f"{what} lists {curve} twice")
        result[curve] = color
    return result


def coloring_to_dict(c: StructuredColoring) -> dict:
    return {
        "level": c.level,
        "anchors": c.anchor_map(),
        "exceptions": {str(x): color for x, color in c.exceptions},
        "overrides": {str(x): color for x, color in c.overrides},
    }


def coloring_from_dict(data) -> StructuredColoring:
    require_object(data, _FIELDS, _REQUIRED, "coloring document")
    level = data["level"]
    if not isinstance(level, int) or isinstance(level, bool) or level < 0:
        raise DocumentError(f"level must be a non-negative integer, got {level!r}")
    anchors = data["anchors"]
    if not isinstance(anchors, dict):
        raise DocumentError("anchors must be an object keyed by tree words")
    return StructuredColoring.from_maps(
        level,
        anchors,
        _curve_map(data["exceptions"], "exceptions"),
        _curve_map(data.get("overrides", {}), "overrides"),
    )


def claims_from_dict(data) -> Optional[Dict[str, Tuple[TorusCurve, ...]]]:
    """Declared defect sets, or None when the document makes no claims"""
    claims = data.get("claims") if isinstance(data, dict) else None
    if claims is None:
        return None
    if not isinstance(claims, dict) or set(claims) - set(GENERATORS):
        raise DocumentError(f"claims must be an object keyed by {sorted(GENERATORS)}")
    for g, curves in claims.items():
        if not isinstance(curves, list) or not all(isinstance(text, str) for text in curves):
            raise DocumentError(f"claims for {g} must be a list of p/q strings, got {curves!r}")
    return {g: tuple(parse_curve(text) for text in curves) for g, curves in claims.items()}


def dumps_coloring(c: StructuredColoring) -> str:
    return to_json(coloring_to_dict(c))


def loads_coloring(text: str) -> StructuredColoring:
    return coloring_from_dict(parse_json(text, "coloring document"))


def load_coloring_document(
    source: Union[str, Path],
) -> Tuple[StructuredColoring, Optional[Dict[str, Tuple[TorusCurve, ...]]]]:
    """Read a coloring and its claims from a path or "-" for stdin"""
    data = parse_json(read_source(source), "coloring document")
    return coloring_from_dict(data), claims_from_dict(data)
