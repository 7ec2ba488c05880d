"""
Torus curves as primitive integer pairs modulo sign.

The mapping class group of the closed torus is SL2(Z); -I acts trivially on
unoriented curves, so everything here is really a PSL2(Z) action. Matrices act
on column vectors and the result is brought back to its canonical sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Iterable, Tuple

import numpy as np

from ..config import ToolkitConfig
from ..errors import DocumentError, NonCanonical, NotPrimitive, NotUnimodular


class Region(str, Enum):
    """The three pieces of the fundamental decomposition of X"""

    X1 = "X1"  # p >= 1, q >= 0
    X2 = "X2"  # q > -p >= 0
    X3 = "X3"  # -p >= q > 0

    @property
    def index(self) -> int:
        return int(self.value[1])


def _region_of(p: int, q: int):
    if p >= 1 and q >= 0:
        return Region.X1
    if q > -p >= 0:
        return Region.X2
    if -p >= q > 0:
        return Region.X3
    return None


@dataclass(frozen=True, slots=True)
class TorusCurve:
    """An unoriented simple closed curve on the torus, stored in canonical form"""

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise NotPrimitive("(0,0) is not a curve")
        if gcd(self.p, self.q) != 1:
            raise NotPrimitive(f"({self.p},{self.q}) is not primitive")
        if _region_of(self.p, self.q) is None:
            raise NonCanonical(f"({self.p},{self.q}) is not canonical; use canonicalize()")

    @property
    def region(self) -> Region:
        return _region_of(self.p, self.q)

    @property
    def max_norm(self) -> int:
        return max(abs(self.p), abs(self.q))

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text: str) -> "TorusCurve":
        return parse_curve(text)


def canonicalize(p: int, q: int) -> TorusCurve:
    """Return the sign representative of (p,q) lying in X1, X2 or X3"""
    p, q = int(p), int(q)
    ToolkitConfig.check_int64(p, "p")
    ToolkitConfig.check_int64(q, "q")
    if (p == 0 and q == 0) or gcd(p, q) != 1:
        raise NotPrimitive(f"({p},{q}) is not primitive")
    if (p > 0 and q >= 0) or (p <= 0 and q > 0):
        return TorusCurve(p, q)
    return TorusCurve(-p, -q)


def region(x: TorusCurve) -> Region:
    return x.region


def curve_sort_key(x: TorusCurve) -> Tuple[int, int, int, int]:
    """Order curves by max-norm, then region, then coordinates"""
    return (x.max_norm, x.region.index, x.p, x.q)


def sorted_curves(curves: Iterable[TorusCurve]) -> list:
    return sorted(curves, key=curve_sort_key)


_CURVE_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_curve(text: str) -> TorusCurve:
    """Parse "p/q"; any primitive pair is accepted and canonicalized"""
    match = _CURVE_PATTERN.match(text) if isinstance(text, str) else None
    if not match:
        raise DocumentError(f"cannot parse curve {text!r}, expected p/q")
    return canonicalize(int(match.group(1)), int(match.group(2)))


def format_curve(x: TorusCurve) -> str:
    return str(x)


# -------------------------
# Matrices and words
# -------------------------

@dataclass(frozen=True, slots=True)
class IntMatrix2:
    """Determinant one integer matrix [[a, b], [c, d]]"""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodular(f"det {self.entries} != 1")

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        product = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        for entry in product:
            ToolkitConfig.check_int64(entry, "matrix entry")
        return IntMatrix2(*product)

    def inverse(self) -> "IntMatrix2":
        return IntMatrix2(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "IntMatrix2":
        """Square-and-multiply; negative exponents use the inverse"""
        base = self if n >= 0 else self.inverse()
        result = IDENTITY
        n = abs(n)
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def act(self, p: int, q: int) -> Tuple[int, int]:
        """Matrix times column vector, without canonicalizing"""
        return (self.a * p + self.b * q, self.c * p + self.d * q)


IDENTITY = IntMatrix2(1, 0, 0, 1)
S = IntMatrix2(0, 1, -1, 0)
R = IntMatrix2(0, -1, 1, 1)
S_INV = S.inverse()
R_INV = R.inverse()


class Letter(str, Enum):
    S = "S"
    S_INV = "S^-1"
    R = "R"
    R_INV = "R^-1"

    @property
    def matrix(self) -> IntMatrix2:
        return _LETTER_MATRICES[self]


_LETTER_MATRICES = {Letter.S: S, Letter.S_INV: S_INV, Letter.R: R, Letter.R_INV: R_INV}
_TOKEN_PATTERN = re.compile(r"([SR])(\^-1|')?")


@dataclass(frozen=True, slots=True)
class GroupWord:
    """
    A word l1 l2 ... ln in S, R and their inverses.

    The word stands for the product l1 * l2 * ... * ln, so ln acts first.
    """

    letters: Tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(letter.value for letter in self.letters)

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Parse tokens S, S^-1, S', R, R^-1, R' separated by spaces or commas"""
        compact = re.sub(r"[\s,]+", "", text)
        letters = []
        position = 0
        while position < len(compact):
            match = _TOKEN_PATTERN.match(compact, position)
            if not match:
                raise DocumentError(f"bad group word {text!r} at {compact[position:]!r}")
            name, inverse = match.groups()
            letters.append(Letter(name + "^-1") if inverse else Letter(name))
            position = match.end()
        return cls(tuple(letters))

    def matrix(self) -> IntMatrix2:
        result = IDENTITY
        for letter in self.letters:
            result = result @ letter.matrix
        return result


def apply(matrix: IntMatrix2, x: TorusCurve) -> TorusCurve:
    """Act on x by a determinant one matrix"""
    p, q = matrix.act(x.p, x.q)
    # Unimodular maps keep pairs primitive, so canonicalize only fixes the sign here
    return canonicalize(p, q)


def apply_word(word: GroupWord, x: TorusCurve) -> TorusCurve:
    for letter in reversed(word.letters):
        x = apply(letter.matrix, x)
    return x


def orbit_rep_X1(x: TorusCurve) -> Tuple[TorusCurve, int]:
    """
    Return (x1, j) with x1 in X1 and x = R^j x1.

    X1 is a complete set of representatives of the R-orbits, and j is 0, 1, 2
    exactly when x lies in X1, X2, X3.
    """
    j = x.region.index - 1
    x1 = x
    for _ in range(j):
        x1 = apply(R_INV, x1)
    return x1, j


def r_orbit(x: TorusCurve) -> Tuple[TorusCurve, TorusCurve, TorusCurve]:
    """The R-orbit (x1, R x1, R^2 x1) through x, starting at its X1 representative"""
    x1, _ = orbit_rep_X1(x)
    rx1 = apply(R, x1)
    return (x1, rx1, apply(R, rx1))


# -------------------------
# Twists and intersection
# -------------------------

def torus_intersection(x: TorusCurve, y: TorusCurve) -> int:
    return abs(x.p * y.q - x.q * y.p)


def torus_twist_matrix(x: TorusCurve) -> IntMatrix2:
    """
    The transvection v -> v + <v,x> x with <(a,b),(p,q)> = aq - bp.

    Quadratic in (p,q), so both signs of x give the same matrix.
    """
    p, q = x.p, x.q
    entries = (1 + p * q, -p * p, q * q, 1 - p * q)
    for entry in entries:
        ToolkitConfig.check_int64(entry, "twist matrix entry")
    return IntMatrix2(*entries)


def twist_power(x: TorusCurve, y: TorusCurve, n: int) -> TorusCurve:
    """Apply the n-th power of the twist along x to y"""
    return apply(torus_twist_matrix(x).power(n), y)


@lru_cache(maxsize=8)
def ball(radius: int) -> Tuple[TorusCurve, ...]:
    """All canonical curves with max(|p|,|q|) <= radius, sorted by curve_sort_key"""
    if radius < 1:
        raise ValueError(f"ball radius must be >= 1, got {radius}")
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    p, q = np.meshgrid(axis, axis, indexing="ij")
    p, q = p.ravel(), q.ravel()
    primitive = np.gcd(p, q) == 1
    canonical = ((p > 0) & (q >= 0)) | ((p <= 0) & (q > 0))
    keep = primitive & canonical
    curves = [TorusCurve(int(a), int(b)) for a, b in zip(p[keep], q[keep])]
    curves.sort(key=curve_sort_key)
    return tuple(curves)
