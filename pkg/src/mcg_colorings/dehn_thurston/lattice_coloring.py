"""
Colorings of the twist lattice Z^d.

A coloring is a background color per sign sector (coordinate >= 0 counts as '+')
plus finitely many exceptional points. This is the smallest class that holds both
almost invariant colorings and ones where a shift recolors infinitely many points.

Axes are 1-based: axis i shifts coordinate i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import ToolkitConfig
from ..errors import DocumentError, IndexOutOfRange, NotAlmostInvariant
from ..formats import parse_json, read_source, require_object, to_json

Point = Tuple[int, ...]


def sign_key(point: Sequence[int]) -> str:
    return "".join("+" if value >= 0 else "-" for value in point)


def all_sign_keys(d: int) -> List[str]:
    return ["".join(signs) for signs in itertools.product("+-", repeat=d)]


def unit(d: int, axis: int, step: int = 1) -> Point:
    return tuple(step if i == axis - 1 else 0 for i in range(d))


def _add(z: Point, w: Point) -> Point:
    return tuple(a + b for a, b in zip(z, w))


def _check_dimension(d) -> None:
    if not isinstance(d, int) or not 1 <= d <= ToolkitConfig.MAX_LATTICE_DIMENSION:
        raise DocumentError(f"dimension must be in 1..{ToolkitConfig.MAX_LATTICE_DIMENSION}, got {d!r}")


@dataclass(frozen=True)
class LatticeColoring:
    dimension: int
    sectors: Tuple[Tuple[str, str], ...]
    exceptions: Tuple[Tuple[Point, str], ...] = ()

    def __post_init__(self):
        _check_dimension(self.dimension)
        keys = [key for key, _ in self.sectors]
        if len(keys) != 2**self.dimension or sorted(keys) != sorted(all_sign_keys(self.dimension)):
            raise DocumentError(
                f"sectors must cover exactly the {2**self.dimension} sign vectors of length {self.dimension}"
            )
        points = [point for point, _ in self.exceptions]
        if len(set(points)) != len(points):
            raise DocumentError("exception points must be distinct")
        for point in points:
            if len(point) != self.dimension:
                raise DocumentError(f"exception point {point} is not {self.dimension}-dimensional")
        for _, color in self.sectors + self.exceptions:
            if not isinstance(color, str) or not color:
                raise DocumentError(f"colors are non-empty strings, got {color!r}")
        object.__setattr__(self, "sectors", tuple(sorted(self.sectors)))
        object.__setattr__(self, "exceptions", tuple(sorted(self.exceptions)))

    @classmethod
    def from_maps(
        cls, d: int, sectors: Mapping[str, str], exceptions: Optional[Mapping[Point, str]] = None
    ) -> "LatticeColoring":
        return cls(d, tuple(sectors.items()), tuple((tuple(p), c) for p, c in (exceptions or {}).items()))

    @classmethod
    def constant(cls, d: int, color: str, exceptions: Optional[Mapping[Point, str]] = None):
        _check_dimension(d)
        return cls.from_maps(d, {key: color for key in all_sign_keys(d)}, exceptions)

    @cached_property
    def sector_map(self) -> Dict[str, str]:
        return dict(self.sectors)

    @cached_property
    def exception_map(self) -> Dict[Point, str]:
        return dict(self.exceptions)

    def color_at(self, point: Sequence[int]) -> str:
        point = tuple(point)
        color = self.exception_map.get(point)
        if color is None:
            color = self.sector_map[sign_key(point)]
        return color

    def check_axis(self, axis: int) -> int:
        if not 1 <= axis <= self.dimension:
            raise IndexOutOfRange(f"axis {axis} outside 1..{self.dimension}")
        return axis

    @property
    def bounding_radius(self) -> int:
        """Max-norm of the exceptional points, 0 without exceptions"""
        return max((max(abs(v) for v in point) for point, _ in self.exceptions), default=0)

    def colors(self) -> List[str]:
        return sorted({c for _, c in self.sectors} | {c for _, c in self.exceptions})


@dataclass(frozen=True)
class ShiftDefect:
    """
    The set {z : c(z + e_axis) != c(z)}.

    points is None when the set is infinite; sectors then names the two
    neighbouring sectors whose colors differ across the axis.
    """

    axis: int
    points: Optional[Tuple[Point, ...]]
    sectors: Optional[Tuple[str, str]] = None

    @property
    def is_finite(self) -> bool:
        return self.points is not None

    def to_dict(self) -> dict:
        if self.is_finite:
            return {"axis": self.axis, "finite": True,
                    "points": [",".join(map(str, p)) for p in self.points]}
        return {"axis": self.axis, "finite": False, "sectors": list(self.sectors)}


def shift_defect(c: LatticeColoring, axis: int) -> ShiftDefect:
    c.check_axis(axis)
    i = axis - 1
    if c.dimension >= 2:
        for key in all_sign_keys(c.dimension):
            if key[i] == "-":
                across = key[:i] + "+" + key[i + 1:]
                if c.sector_map[key] != c.sector_map[across]:
                    return ShiftDefect(axis, None, (key, across))

    step = unit(c.dimension, axis)
    back = unit(c.dimension, axis, -1)
    candidates = set()
    for point, _ in c.exceptions:
        candidates.add(point)
        candidates.add(_add(point, back))
    if c.dimension == 1:
        # A one-dimensional sector change is a single boundary point
        candidates.add(back)
    points = sorted(z for z in candidates if c.color_at(_add(z, step)) != c.color_at(z))
    return ShiftDefect(axis, tuple(points))


def axis_defects(c: LatticeColoring) -> Dict[int, ShiftDefect]:
    return {axis: shift_defect(c, axis) for axis in range(1, c.dimension + 1)}


def require_almost_invariant(c: LatticeColoring) -> Dict[int, ShiftDefect]:
    defects = axis_defects(c)
    failed = [axis for axis, d in defects.items() if not d.is_finite]
    if failed:
        raise NotAlmostInvariant(f"shifts along axes {failed} recolor infinitely many points")
    return defects


def future(
    c: LatticeColoring, axis: int, base: Optional[Sequence[int]] = None, power: int = 1
) -> str:
    """
    Eventual color of base + n * power * e_axis as n grows.

    power = -1 gives the future of the inverse twist, which is the past.
    """
    require_almost_invariant(c)
    c.check_axis(axis)
    if power == 0:
        raise ValueError("power must be non-zero")
    base = tuple(base) if base is not None else (0,) * c.dimension
    key = list(sign_key(base))
    key[axis - 1] = "+" if power > 0 else "-"
    return c.sector_map["".join(key)]


def past(
    c: LatticeColoring, axis: int, base: Optional[Sequence[int]] = None, power: int = 1
) -> str:
    return future(c, axis, base, -power)


def scan_window(c: LatticeColoring, radius: Optional[int] = None) -> Tuple[np.ndarray, List[str]]:
    """
    Color codes over [-radius, radius]^d, indexed by coordinate + radius.

    Codes index into the returned sorted palette. The default radius reaches
    LATTICE_MARGIN past the exceptions.
    """
    if radius is None:
        radius = c.bounding_radius + ToolkitConfig.LATTICE_MARGIN
    side = 2 * radius + 1
    coords = np.indices((side,) * c.dimension) - radius
    palette = c.colors()
    code_of = {color: code for code, color in enumerate(palette)}
    codes = np.full((side,) * c.dimension, -1, dtype=np.int16)
    for key, color in c.sectors:
        mask = np.ones(codes.shape, dtype=bool)
        for i, sign in enumerate(key):
            mask &= coords[i] >= 0 if sign == "+" else coords[i] < 0
        codes[mask] = code_of[color]
    for point, color in c.exceptions:
        if max(abs(v) for v in point) <= radius:
            codes[tuple(v + radius for v in point)] = code_of[color]
    return codes, palette


def window_shift_defect(
    c: LatticeColoring, axis: int, radius: Optional[int] = None
) -> Optional[Tuple[Point, ...]]:
    """
    Shift defect read off a dense window scan.

    Returns None when a recolored point touches the window border, otherwise the
    sorted recolored points. The default radius reaches one past the scan margin.
    """
    c.check_axis(axis)
    if radius is None:
        radius = c.bounding_radius + ToolkitConfig.LATTICE_MARGIN + 1
    codes, _ = scan_window(c, radius)
    changed = np.diff(codes, axis=axis - 1) != 0
    points = []
    for index in zip(*np.nonzero(changed)):
        z = tuple(int(i) - radius for i in index)
        for j, v in enumerate(z):
            edge = (-radius, radius - 1) if j == axis - 1 else (-radius, radius)
            if v in edge:
                return None
        points.append(z)
    return tuple(sorted(points))


# -------------------------
# Documents
# -------------------------

def _parse_point(text: str, d: int) -> Point:
    try:
        point = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise DocumentError(f"bad lattice point {text!r}") from e
    if len(point) != d:
        raise DocumentError(f"lattice point {text!r} is not {d}-dimensional")
    return point


def lattice_to_dict(c: LatticeColoring) -> dict:
    return {
        "d": c.dimension,
        "sectors": dict(c.sectors),
        "exceptions": {",".join(map(str, p)): color for p, color in c.exceptions},
    }


def lattice_from_dict(data) -> LatticeColoring:
    require_object(data, {"d", "sectors", "exceptions"}, {"d", "sectors"}, "lattice document")
    d = data["d"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise DocumentError(f"d must be an integer, got {d!r}")
    sectors = data["sectors"]
    exceptions = data.get("exceptions", {})
    if not isinstance(sectors, dict) or not isinstance(exceptions, dict):
        raise DocumentError("sectors and exceptions must be objects")
    points = {}
    for text, color in exceptions.items():
        point = _parse_point(text, d)
        if point in points:
            raise DocumentError(f"exception point {text!r} listed twice")
        points[point] = color
    return LatticeColoring.from_maps(d, sectors, points)


def dumps_lattice(c: LatticeColoring) -> str:
    return to_json(lattice_to_dict(c))


def load_lattice_document(source: Union[str, Path]) -> LatticeColoring:
    return lattice_from_dict(parse_json(read_source(source), "lattice document"))
