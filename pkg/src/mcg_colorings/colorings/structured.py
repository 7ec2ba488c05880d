"""
Structured almost invariant colorings of torus curves.

A coloring is stored as finite data:
- anchors: one color per level-k tree vertex, inherited by its whole subtree
- exceptions: one color per shallow vertex ((1,0) and the labels of level < k)
- overrides: finitely many curves whose color is set directly

Off the overrides the coloring is R-invariant: a curve gets the color of its
X1 representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..config import ToolkitConfig
from ..errors import DuplicateColor, InvalidColoring, PaletteSize
from ..torus.lattice import TorusCurve, curve_sort_key, orbit_rep_X1
from ..torus.tree import (
    SPECIAL,
    TreeWord,
    enumerate_level_vertices,
    level_of,
    word_prefix,
)

Color = str


def shallow_vertices(k: int) -> List[TorusCurve]:
    """(1,0) followed by the 2^k - 1 labels of level < k, level by level"""
    vertices = [SPECIAL]
    for level in range(k):
        vertices.extend(vertex.label for vertex in enumerate_level_vertices(level))
    return vertices


def _sorted_items(mapping: Mapping[TorusCurve, Color]) -> Tuple[Tuple[TorusCurve, Color], ...]:
    return tuple(sorted(mapping.items(), key=lambda item: curve_sort_key(item[0])))


def _check_level(level) -> None:
    if not isinstance(level, int) or isinstance(level, bool) or level < 0:
        raise InvalidColoring(f"level must be a non-negative integer, got {level!r}")
    if level > ToolkitConfig.MAX_COLORING_LEVEL:
        raise InvalidColoring(f"level {level} exceeds the supported maximum {ToolkitConfig.MAX_COLORING_LEVEL}")


def _check_color(color: Color) -> None:
    if not isinstance(color, str) or not color:
        raise InvalidColoring(f"colors are non-empty strings, got {color!r}")


@dataclass(frozen=True)
class StructuredColoring:
    """Immutable coloring value; build it with from_maps() or construct()"""

    level: int
    anchors: Tuple[Color, ...]
    exceptions: Tuple[Tuple[TorusCurve, Color], ...]
    overrides: Tuple[Tuple[TorusCurve, Color], ...] = ()

    def __post_init__(self):
        _check_level(self.level)
        if len(self.anchors) != 2**self.level:
            raise InvalidColoring(
                f"level {self.level} needs {2**self.level} anchors, got {len(self.anchors)}"
            )
        for color in self.anchors:
            _check_color(color)

        exception_keys = [curve for curve, _ in self.exceptions]
        if len(set(exception_keys)) != len(exception_keys) or set(exception_keys) != set(
            shallow_vertices(self.level)
        ):
            raise InvalidColoring(
                f"exceptions must cover exactly (1,0) and the labels of level < {self.level}"
            )
        override_keys = [curve for curve, _ in self.overrides]
        if len(set(override_keys)) != len(override_keys):
            raise InvalidColoring("override curves must be distinct")
        for _, color in self.exceptions + self.overrides:
            _check_color(color)

        # Canonical ordering so equal colorings compare equal
        object.__setattr__(self, "exceptions", _sorted_items(dict(self.exceptions)))
        object.__setattr__(self, "overrides", _sorted_items(dict(self.overrides)))

    @classmethod
    def from_maps(
        cls,
        level: int,
        anchors: Union[Sequence[Color], Mapping[Union[str, TreeWord], Color]],
        exceptions: Mapping[TorusCurve, Color],
        overrides: Optional[Mapping[TorusCurve, Color]] = None,
    ) -> "StructuredColoring":
        """Build from a word -> color map (or a list in lexicographic order) and curve maps"""
        _check_level(level)
        if len(anchors) != 2**level:
            raise InvalidColoring(f"level {level} needs {2**level} anchors, got {len(anchors)}")
        if isinstance(anchors, Mapping):
            ordered: List[Optional[Color]] = [None] * 2**level
            for word, color in anchors.items():
                word = TreeWord.parse(word) if isinstance(word, str) else word
                if len(word) != level:
                    raise InvalidColoring(f"anchor word {word} does not have length {level}")
                ordered[word.index] = color
            if any(color is None for color in ordered):
                raise InvalidColoring(f"anchors must cover all {2**level} words of length {level}")
            anchors = ordered
        return cls(level, tuple(anchors), tuple(exceptions.items()), tuple((overrides or {}).items()))

    @cached_property
    def exception_map(self) -> Dict[TorusCurve, Color]:
        return dict(self.exceptions)

    @cached_property
    def override_map(self) -> Dict[TorusCurve, Color]:
        return dict(self.overrides)

    def anchor(self, word: TreeWord) -> Color:
        return self.anchors[word.index]

    def anchor_map(self) -> Dict[str, Color]:
        return {
            str(TreeWord.from_index(self.level, index)): color
            for index, color in enumerate(self.anchors)
        }

    def colors(self) -> set:
        """Every color that appears anywhere in the data"""
        used = set(self.anchors)
        used.update(color for _, color in self.exceptions)
        used.update(color for _, color in self.overrides)
        return used

    def without_overrides(self) -> "StructuredColoring":
        if not self.overrides:
            return self
        return StructuredColoring(self.level, self.anchors, self.exceptions)

    def with_overrides(self, overrides: Mapping[TorusCurve, Color]) -> "StructuredColoring":
        return StructuredColoring(self.level, self.anchors, self.exceptions, tuple(overrides.items()))


def construct(
    k: int,
    palette: Sequence[Color],
    exception_colors: Optional[Mapping[TorusCurve, Color]] = None,
) -> StructuredColoring:
    """
    Color the 2^k level-k subtrees with distinct colors, R-invariantly.

    Shallow vertices not listed in exception_colors take the color of their
    leftmost level-k descendant; the (1,0) vertex counts as sitting above the root.
    """
    _check_level(k)
    if len(palette) != 2**k:
        raise PaletteSize(f"level {k} needs a palette of {2**k} colors, got {len(palette)}")
    if len(set(palette)) != len(palette):
        raise DuplicateColor(f"palette colors must be distinct: {list(palette)}")

    exceptions: Dict[TorusCurve, Color] = {SPECIAL: palette[0]}
    for level in range(k):
        for vertex in enumerate_level_vertices(level):
            exceptions[vertex.label] = palette[vertex.word.index << (k - level)]

    for curve, color in (exception_colors or {}).items():
        if curve not in exceptions:
            raise InvalidColoring(f"{curve} is not (1,0) or a label of level < {k}")
        exceptions[curve] = color

    return StructuredColoring.from_maps(k, list(palette), exceptions)


def structural_color(c: StructuredColoring, x: TorusCurve) -> Color:
    """Color of x ignoring overrides"""
    x1, _ = orbit_rep_X1(x)
    if x1 == SPECIAL:
        return c.exception_map[SPECIAL]
    if level_of(x1) >= c.level:
        return c.anchors[word_prefix(x1, c.level).index]
    return c.exception_map[x1]


def color_of(c: StructuredColoring, x: TorusCurve) -> Color:
    override = c.override_map.get(x)
    if override is not None:
        return override
    return structural_color(c, x)
