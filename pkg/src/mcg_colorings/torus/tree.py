"""
The labelled binary tree T.

Every curve (p,q) with p,q >= 1 is reached from the root (1,1) by a unique
word in the letters 1 = S^-1 R : (p,q) -> (p+q, q) and 2 = S^-1 R^2 : (p,q) -> (p, p+q).
A special vertex labelled (1,0) sits below the root at level -1.

Words are stored in application order: the first letter is applied to (1,1) first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from ..config import ToolkitConfig
from ..errors import DocumentError, NotInPositiveQuadrant, SpecialVertex
from ..formats import to_json
from .lattice import Region, TorusCurve

ROOT = TorusCurve(1, 1)
SPECIAL = TorusCurve(1, 0)
SPECIAL_KEY = "-"


@dataclass(frozen=True, slots=True)
class TreeWord:
    """Sequence over {1, 2}; the empty word is the root"""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter not in (1, 2):
                raise DocumentError(f"tree words use letters 1 and 2, got {letter!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters)

    @classmethod
    def parse(cls, text: str) -> "TreeWord":
        if any(ch not in "12" for ch in text):
            raise DocumentError(f"tree word {text!r} must be a string over '1' and '2'")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_index(cls, length: int, index: int) -> "TreeWord":
        """Inverse of index: the index-th word of the given length in lexicographic order"""
        if not 0 <= index < 2**length:
            raise IndexError(f"no word of length {length} with index {index}")
        return cls(tuple(((index >> shift) & 1) + 1 for shift in range(length - 1, -1, -1)))

    @property
    def index(self) -> int:
        """Position among the words of the same length, '1' before '2'"""
        value = 0
        for letter in self.letters:
            value = 2 * value + (letter - 1)
        return value

    def prefix(self, k: int) -> "TreeWord":
        return TreeWord(self.letters[:k])

    def child(self, letter: int) -> "TreeWord":
        return TreeWord(self.letters + (letter,))


@dataclass(frozen=True, slots=True)
class TreeVertex:
    """A vertex of T; the special (1,0) vertex carries word None"""

    word: Optional[TreeWord]
    label: TorusCurve

    @property
    def is_special(self) -> bool:
        return self.word is None

    @property
    def level(self) -> int:
        return -1 if self.word is None else len(self.word)

    @property
    def key(self) -> str:
        return SPECIAL_KEY if self.word is None else str(self.word)


ROOT_VERTEX = TreeVertex(TreeWord(), ROOT)
SPECIAL_VERTEX = TreeVertex(None, SPECIAL)


def _step(p: int, q: int, letter: int) -> Tuple[int, int]:
    if letter == 1:
        p = ToolkitConfig.check_int64(p + q, "tree label")
    else:
        q = ToolkitConfig.check_int64(p + q, "tree label")
    return p, q


def evaluate(word: TreeWord) -> TorusCurve:
    """Apply the word to (1,1)"""
    p, q = 1, 1
    for letter in word.letters:
        p, q = _step(p, q, letter)
    return TorusCurve(p, q)


def _check_positive(x: TorusCurve) -> None:
    if x.region is not Region.X1 or x.q == 0:
        raise NotInPositiveQuadrant(f"{x} has no tree word (needs p >= 1 and q >= 1)")


@lru_cache(maxsize=1 << 16)
def factorize_runs(x: TorusCurve) -> Tuple[Tuple[int, int], ...]:
    """
    Run-length tree word of x as (letter, count) pairs in application order.

    Walks back to (1,1) by division instead of one subtraction at a time.
    A run ending at (1,1) stops one short of the full quotient.
    """
    _check_positive(x)
    p, q = x.p, x.q
    runs = []
    while p != 1 or q != 1:
        if p > q:
            count = p // q if q > 1 else p - 1
            p -= count * q
            runs.append((1, count))
        else:
            count = q // p if p > 1 else q - 1
            q -= count * p
            runs.append((2, count))
    runs.reverse()
    return tuple(runs)


def factorize(x: TorusCurve) -> TreeWord:
    letters = []
    for letter, count in factorize_runs(x):
        letters.extend([letter] * count)
    return TreeWord(tuple(letters))


def factorize_subtractive(x: TorusCurve) -> TreeWord:
    """Reference factorization: one subtraction per letter"""
    _check_positive(x)
    p, q = x.p, x.q
    reversed_letters = []
    while p != 1 or q != 1:
        if p > q:
            p, letter = p - q, 1
        else:
            q, letter = q - p, 2
        reversed_letters.append(letter)
    return TreeWord(tuple(reversed(reversed_letters)))


def level_of(x: TorusCurve) -> int:
    if x == SPECIAL:
        return -1
    if x.region is not Region.X1:
        raise NotInPositiveQuadrant(f"{x} is not in X1")
    return sum(count for _, count in factorize_runs(x))


def word_prefix(x: TorusCurve, k: int) -> TreeWord:
    """First k letters of factorize(x); x must have level >= k"""
    letters: List[int] = []
    for letter, count in factorize_runs(x):
        take = min(count, k - len(letters))
        letters.extend([letter] * take)
        if len(letters) == k:
            return TreeWord(tuple(letters))
    if len(letters) < k:
        raise ValueError(f"{x} has level {len(letters)} < {k}")
    return TreeWord(tuple(letters))


def vertex_of(x: TorusCurve) -> TreeVertex:
    if x == SPECIAL:
        return SPECIAL_VERTEX
    return TreeVertex(factorize(x), x)


def children(vertex: TreeVertex) -> Tuple[TreeVertex, TreeVertex]:
    if vertex.is_special:
        raise SpecialVertex("the (1,0) vertex has no children")
    p, q = vertex.label.pair
    left = TreeVertex(vertex.word.child(1), TorusCurve(*_step(p, q, 1)))
    right = TreeVertex(vertex.word.child(2), TorusCurve(*_step(p, q, 2)))
    return left, right


def enumerate_level_vertices(k: int) -> List[TreeVertex]:
    """The 2^k vertices at level k in lexicographic word order"""
    if k < 0:
        raise ValueError(f"level must be >= 0, got {k}")
    frontier = [ROOT_VERTEX]
    for _ in range(k):
        frontier = [child for vertex in frontier for child in children(vertex)]
    return frontier


def enumerate_level(k: int) -> List[TorusCurve]:
    return [vertex.label for vertex in enumerate_level_vertices(k)]


def vertices_up_to(depth: int) -> List[TreeVertex]:
    """The (1,0) vertex followed by all vertices of level <= depth, level by level"""
    vertices = [SPECIAL_VERTEX]
    frontier = [ROOT_VERTEX]
    for level in range(depth + 1):
        vertices.extend(frontier)
        if level < depth:
            frontier = [child for vertex in frontier for child in children(vertex)]
    return vertices


def _parent_key(vertex: TreeVertex) -> Optional[str]:
    if vertex.is_special:
        return None
    if len(vertex.word) == 0:
        return SPECIAL_KEY
    return str(vertex.word.prefix(len(vertex.word) - 1))


# -------------------------
# Emitters
# -------------------------

def _emit_json(vertices: List[TreeVertex]) -> str:
    payload = {
        "vertices": [
            {"word": vertex.key, "label": str(vertex.label), "level": vertex.level}
            for vertex in vertices
        ],
        "edges": [
            [_parent_key(vertex), vertex.key]
            for vertex in vertices
            if not vertex.is_special
        ],
    }
    return to_json(payload)


def _emit_dot(vertices: List[TreeVertex]) -> str:
    labels = {vertex.key: str(vertex.label) for vertex in vertices}
    lines = ["digraph T {"]
    for vertex in vertices:
        lines.append(f'  "{vertex.label}" [level={vertex.level}];')
    for vertex in vertices:
        if not vertex.is_special:
            lines.append(f'  "{labels[_parent_key(vertex)]}" -> "{vertex.label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# Add new formats here
TREE_EMITTERS: Dict[str, Callable[[List[TreeVertex]], str]] = {
    "json": _emit_json,
    "dot": _emit_dot,
}


def emit_tree(depth: int, fmt: str = "json") -> str:
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if fmt not in TREE_EMITTERS:
        raise DocumentError(f"unknown tree format {fmt!r}, choose from {sorted(TREE_EMITTERS)}")
    return TREE_EMITTERS[fmt](vertices_up_to(depth))
