"""
Exact defect sets of structured colorings.

The S-defect of an override-free coloring is confined to the labels of level
<= k (with (1,0) at level -1) and their S-images: a label v of level > k is a
child of some u, S v lies in the R-orbit of u, and v inherits u's anchor.
Overrides only add themselves and their images under the generator.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Set, Tuple

import pandas as pd

from ..progress import print_progress, print_summary
from ..torus.lattice import IntMatrix2, R, S, TorusCurve, apply, ball, sorted_curves
from .structured import StructuredColoring, color_of, shallow_vertices

GENERATORS: Dict[str, IntMatrix2] = {"S": S, "R": R}


def _generator(name: str) -> IntMatrix2:
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}, expected one of {sorted(GENERATORS)}")
    return GENERATORS[name]


@dataclass(frozen=True)
class DefectReport:
    """The exact set {x : c(g x) != c(x)} for one generator"""

    generator: str
    defect: Tuple[TorusCurve, ...]
    certified: bool

    def to_dict(self) -> dict:
        return {"defect": [str(x) for x in self.defect], "certified": self.certified}


def defect_candidates(c: StructuredColoring, generator: str) -> Set[TorusCurve]:
    """A finite set guaranteed to contain the whole defect"""
    matrix = _generator(generator)
    candidates: Set[TorusCurve] = set()
    if generator == "S":
        for vertex in shallow_vertices(c.level + 1):
            candidates.add(vertex)
            candidates.add(apply(S, vertex))
    inverse = matrix.inverse()
    for curve, _ in c.overrides:
        candidates.update((curve, apply(matrix, curve), apply(inverse, curve)))
    return candidates


def defect(c: StructuredColoring, generator: str) -> DefectReport:
    matrix = _generator(generator)
    changed = [
        x for x in defect_candidates(c, generator)
        if color_of(c, apply(matrix, x)) != color_of(c, x)
    ]
    return DefectReport(generator, tuple(sorted_curves(changed)), certified=True)


# -------------------------
# Ball scans
# -------------------------

@dataclass
class BallReport:
    """Violations found by brute force inside ball(radius), next to what defect() predicts"""

    radius: int
    violations: Dict[str, Tuple[TorusCurve, ...]]
    expected: Dict[str, Tuple[TorusCurve, ...]]
    table: pd.DataFrame = field(repr=False)

    @property
    def consistent(self) -> bool:
        return all(self.violations[g] == self.expected[g] for g in self.violations)

    def matches(self, claims: Dict[str, Iterable[TorusCurve]]) -> bool:
        """Compare the scan with declared defect sets, restricted to the ball"""
        for generator, claimed in claims.items():
            inside = {x for x in claimed if x.max_norm <= self.radius}
            if set(self.violations.get(generator, ())) != inside:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "violations": {g: [str(x) for x in xs] for g, xs in self.violations.items()},
            "consistent": self.consistent,
        }


def verify_ball(
    c: StructuredColoring,
    radius: int,
    generators: Optional[Iterable[str]] = None,
) -> BallReport:
    """Scan every curve of max-norm <= radius and record where a generator changes the color"""
    generators = list(generators or GENERATORS)
    scan_start = time.time()
    step_time = print_progress(f"Enumerating ball of radius {radius}")
    curves = ball(radius)
    step_time = print_progress(f"Ball has {len(curves):,} curves", step_time)

    cache: Dict[TorusCurve, str] = {}

    def cached_color(x: TorusCurve) -> str:
        color = cache.get(x)
        if color is None:
            color = cache[x] = color_of(c, x)
        return color

    rows = []
    violations: Dict[str, Tuple[TorusCurve, ...]] = {}
    expected: Dict[str, Tuple[TorusCurve, ...]] = {}
    for generator in generators:
        gen_time = print_progress(f"Scanning generator {generator}")
        matrix = _generator(generator)
        found = []
        for x in curves:
            image = apply(matrix, x)
            if cached_color(image) != cached_color(x):
                found.append(x)
                rows.append((generator, str(x), cached_color(x), str(image), cached_color(image)))
        violations[generator] = tuple(found)
        expected[generator] = tuple(
            x for x in defect(c, generator).defect if x.max_norm <= radius
        )
        print_progress(f"{generator}: {len(found):,} violations", gen_time)

    table = pd.DataFrame(rows, columns=["generator", "curve", "color", "image", "image_color"])
    report = BallReport(radius, violations, expected, table)
    print_summary(
        "BALL VERIFICATION SUMMARY",
        [("Radius", radius), ("Curves scanned", len(curves))]
        + [(f"{g} violations", len(v)) for g, v in violations.items()]
        + [("Agrees with defect()", report.consistent),
           ("Total time", f"{time.time() - scan_start:.2f}s")],
    )
    return report
