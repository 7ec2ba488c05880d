"""
Dehn-Thurston coordinates and the action of pants-curve twists.

Each pants curve gamma_k carries an intersection number m_k >= 0 and a twisting
number t_k. Twisting n times along gamma_k adds n * m_k to t_k and leaves every
other coordinate alone. No admissibility conditions beyond m_k >= 0 are enforced.

Curve indices are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import ToolkitConfig
from ..errors import (
    DocumentError,
    IndexOutOfRange,
    InvalidSurface,
    NotDistinct,
    NotInteresting,
)


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus g with r boundary components"""

    genus: int
    boundary: int

    def __post_init__(self):
        ok = (self.genus >= 2 and self.boundary >= 0) or (self.genus == 1 and self.boundary == 0)
        if not ok:
            raise InvalidSurface(
                f"need g >= 2 and r >= 0, or g = 1 and r = 0; got g={self.genus}, r={self.boundary}"
            )

    @property
    def pants_curves(self) -> int:
        return 3 * self.genus + self.boundary - 3


@dataclass(frozen=True)
class DTMulticurve:
    surface: SurfaceSpec
    m: Tuple[int, ...]
    t: Tuple[int, ...]

    def __post_init__(self):
        n = self.surface.pants_curves
        if len(self.m) != n or len(self.t) != n:
            raise DocumentError(
                f"surface needs {n} coordinate pairs, got {len(self.m)} m and {len(self.t)} t"
            )
        if any(value < 0 for value in self.m):
            raise DocumentError(f"intersection numbers must be >= 0, got {self.m}")
        for value in self.m + self.t:
            ToolkitConfig.check_int64(value, "coordinate")

    @classmethod
    def from_coordinates(
        cls, surface: SurfaceSpec, m: Sequence[int], t: Optional[Sequence[int]] = None
    ) -> "DTMulticurve":
        """Missing trailing coordinates are zero"""
        n = surface.pants_curves
        t = list(t or [])
        if len(m) > n or len(t) > n:
            raise DocumentError(f"surface has only {n} pants curves")
        m = list(m) + [0] * (n - len(m))
        t = t + [0] * (n - len(t))
        return cls(surface, tuple(m), tuple(t))

    def check_index(self, k: int) -> int:
        if not 1 <= k <= self.surface.pants_curves:
            raise IndexOutOfRange(f"curve index {k} outside 1..{self.surface.pants_curves}")
        return k

    def format(self) -> str:
        """g,r;m1:t1,m2:t2,... with trailing 0:0 pairs left out"""
        pairs = list(zip(self.m, self.t))
        while pairs and pairs[-1] == (0, 0):
            pairs.pop()
        body = ",".join(f"{m}:{t}" for m, t in pairs)
        return f"{self.surface.genus},{self.surface.boundary};{body}"

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "DTMulticurve":
        return parse_multicurve(text)


_DT_PATTERN = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*;\s*(.*?)\s*$")
_PAIR_PATTERN = re.compile(r"^\s*(\d+)\s*:\s*([+-]?\d+)\s*$")


def parse_multicurve(text: str) -> DTMulticurve:
    match = _DT_PATTERN.match(text)
    if not match:
        raise DocumentError(f"cannot parse {text!r}, expected g,r;m1:t1,m2:t2,...")
    surface = SurfaceSpec(int(match.group(1)), int(match.group(2)))
    m: List[int] = []
    t: List[int] = []
    body = match.group(3)
    if body:
        for pair in body.split(","):
            pair_match = _PAIR_PATTERN.match(pair)
            if not pair_match:
                raise DocumentError(f"bad coordinate pair {pair!r}, expected m:t")
            m.append(int(pair_match.group(1)))
            t.append(int(pair_match.group(2)))
    return DTMulticurve.from_coordinates(surface, m, t)


# -------------------------
# Twist action
# -------------------------

def twist(D: DTMulticurve, k: int, n: int = 1) -> DTMulticurve:
    """Apply the n-th power of the twist along pants curve k"""
    D.check_index(k)
    t = list(D.t)
    t[k - 1] = ToolkitConfig.check_int64(t[k - 1] + n * D.m[k - 1], "twisting number")
    return DTMulticurve(D.surface, D.m, tuple(t))


def acts_trivially(D: DTMulticurve, k: int) -> bool:
    D.check_index(k)
    return D.m[k - 1] == 0


def is_interesting(k: int, D: DTMulticurve) -> bool:
    return not acts_trivially(D, k)


def string(D: DTMulticurve, k: int, a: int, b: int) -> List[DTMulticurve]:
    """The window [a, b] of the twist string through D"""
    if a > b:
        raise ValueError(f"empty window [{a}, {b}]")
    D.check_index(k)
    return [twist(D, k, n) for n in range(a, b + 1)]


@dataclass(frozen=True)
class TwistLattice:
    """
    Embedding of Z^d into the twist orbit of D along pairwise distinct pants curves.

    The twists commute and each one moves only its own twisting number, so the
    map is injective as long as every chosen curve meets D.
    """

    base: DTMulticurve
    indices: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.indices)

    def __call__(self, point: Sequence[int]) -> DTMulticurve:
        if len(point) != self.dimension:
            raise IndexOutOfRange(f"expected {self.dimension} exponents, got {len(point)}")
        D = self.base
        for k, n in zip(self.indices, point):
            D = twist(D, k, n)
        return D

    def locate(self, D: DTMulticurve) -> Optional[Tuple[int, ...]]:
        """Exponents reaching D from the base, or None when D is not in the image"""
        if D.surface != self.base.surface or D.m != self.base.m:
            return None
        moving = set(self.indices)
        for k in range(1, D.surface.pants_curves + 1):
            if k not in moving and D.t[k - 1] != self.base.t[k - 1]:
                return None
        point = []
        for k in self.indices:
            shift, rest = divmod(D.t[k - 1] - self.base.t[k - 1], self.base.m[k - 1])
            if rest:
                return None
            point.append(shift)
        return tuple(point)


def lattice_from_twists(D: DTMulticurve, ks: Sequence[int]) -> TwistLattice:
    if len(set(ks)) != len(ks):
        raise NotDistinct(f"twist indices must be distinct, got {list(ks)}")
    for k in ks:
        if acts_trivially(D, k):
            raise NotInteresting(f"twist {k} acts trivially on {D} (m_{k} = 0)")
    return TwistLattice(D, tuple(ks))


def coordinates_summary(D: DTMulticurve) -> Dict[str, object]:
    return {
        "multicurve": D.format(),
        "interesting": [k for k in range(1, D.surface.pants_curves + 1) if D.m[k - 1] > 0],
    }
