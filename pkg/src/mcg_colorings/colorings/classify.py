"""
Equivalence and classification of structured colorings.

Two colorings are equivalent when they differ at finitely many curves. For
structured colorings that is decidable: refine both to the same anchor level
and compare anchors; everything else is finite data.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Optional, Tuple, Union

from ..config import ToolkitConfig
from ..errors import InvalidColoring, TrivialSplit
from ..torus.lattice import Region, TorusCurve, orbit_rep_X1, r_orbit, sorted_curves
from ..torus.tree import TreeWord, enumerate_level, level_of
from .defects import defect
from .structured import (
    Color,
    StructuredColoring,
    color_of,
    shallow_vertices,
    structural_color,
)


def simplify(
    c: StructuredColoring,
    f: Union[Mapping[Color, Color], Callable[[Color], Color]],
) -> StructuredColoring:
    """Post-compose the coloring with a map of colors"""
    if isinstance(f, Mapping):
        missing = c.colors() - set(f)
        if missing:
            raise InvalidColoring(f"color map does not cover {sorted(missing)}")
        mapping = f
        f = mapping.__getitem__
    return StructuredColoring(
        c.level,
        tuple(f(color) for color in c.anchors),
        tuple((x, f(color)) for x, color in c.exceptions),
        tuple((x, f(color)) for x, color in c.overrides),
    )


def binarize(
    c: StructuredColoring,
    c0: Iterable[Color],
    names: Tuple[Color, Color] = ToolkitConfig.BINARY_COLOR_NAMES,
) -> StructuredColoring:
    """
    Two-color simplification sending c0 to names[0] and everything else to names[1].

    Both classes must hold an anchor color, since anchor subtrees are the
    infinite parts of a structured coloring.
    """
    c0 = set(c0)
    anchor_colors = set(c.anchors)
    if not anchor_colors & c0 or not anchor_colors - c0:
        raise TrivialSplit(
            f"split {sorted(c0)} leaves one side without anchor colors {sorted(anchor_colors)}"
        )
    return simplify(c, lambda color: names[0] if color in c0 else names[1])


def is_trivial(c: StructuredColoring) -> bool:
    return len(set(c.anchors)) == 1


def minority_bound(c: StructuredColoring) -> Optional[int]:
    """
    For a trivial coloring, how many curves can avoid the anchor color.

    Each shallow vertex with a different exception color accounts for its R-orbit
    of three curves, each override for one more. None for non-trivial colorings.
    """
    if not is_trivial(c):
        return None
    majority = c.anchors[0]
    odd_exceptions = sum(1 for _, color in c.exceptions if color != majority)
    return 3 * odd_exceptions + len(c.overrides)


def refine(c: StructuredColoring, K: int) -> StructuredColoring:
    """Express the same coloring with anchors at level K >= c.level"""
    if K < c.level:
        raise InvalidColoring(f"cannot refine level {c.level} coloring down to {K}")
    shift = K - c.level
    anchors = tuple(c.anchors[index >> shift] for index in range(2**K))
    exceptions = {x: structural_color(c, x) for x in shallow_vertices(K)}
    return StructuredColoring(K, anchors, tuple(exceptions.items()), c.overrides)


class EquivalenceResult(NamedTuple):
    """
    equivalent=True: witness is the full finite set of curves where the colorings differ.
    equivalent=False: witness is a refined anchor word whose subtree disagrees everywhere.
    """

    equivalent: bool
    witness: Union[Tuple[TorusCurve, ...], str]

    def to_dict(self) -> dict:
        witness = self.witness if isinstance(self.witness, str) else [str(x) for x in self.witness]
        return {"equivalent": self.equivalent, "witness": witness}


def equivalent(c1: StructuredColoring, c2: StructuredColoring) -> EquivalenceResult:
    K = max(c1.level, c2.level)
    r1, r2 = refine(c1, K), refine(c2, K)
    for index, (a, b) in enumerate(zip(r1.anchors, r2.anchors)):
        if a != b:
            return EquivalenceResult(False, str(TreeWord.from_index(K, index)))

    # Same anchors: differences live on shallow R-orbits and overrides
    candidates = set()
    for vertex in shallow_vertices(K):
        candidates.update(r_orbit(vertex))
    candidates.update(x for x, _ in c1.overrides)
    candidates.update(x for x, _ in c2.overrides)
    differences = [x for x in candidates if color_of(c1, x) != color_of(c2, x)]
    return EquivalenceResult(True, tuple(sorted_curves(differences)))


def r_invariantify(c: StructuredColoring) -> StructuredColoring:
    """
    Make the coloring R-invariant by giving each overridden R-orbit the color
    of its X1 representative. Orbits that end up structural drop their overrides.
    """
    if not c.overrides:
        return c
    representatives = {orbit_rep_X1(x)[0] for x, _ in c.overrides}
    overrides: Dict[TorusCurve, Color] = {}
    for x1 in representatives:
        color = color_of(c, x1)
        if color == structural_color(c, x1):
            continue
        for y in r_orbit(x1):
            overrides[y] = color
    return c.without_overrides().with_overrides(overrides)


def normalize(c: StructuredColoring) -> StructuredColoring:
    """
    Canonical override-free form of c, equivalent to it.

    After R-invariantifying, K is the smallest level such that no label deeper
    than K is in the S-defect; each level-K label then shares its color with all
    of its descendants, so those colors become the anchors.
    """
    invariant = r_invariantify(c)
    s_defect = defect(invariant, "S").defect
    deepest = max(
        (level_of(x) for x in s_defect if x.region is Region.X1),
        default=-1,
    )
    K = max(0, deepest)
    anchors = tuple(color_of(invariant, label) for label in enumerate_level(K))
    exceptions = {x: color_of(invariant, x) for x in shallow_vertices(K)}
    return StructuredColoring(K, anchors, tuple(exceptions.items()))
