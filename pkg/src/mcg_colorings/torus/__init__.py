"""
Torus Curves
============

Exact model of the curves on the closed torus and the labelled binary tree.

Modules:
- lattice: canonical primitive pairs, the PSL2(Z) action, regions, twists, balls
- tree: the unique factorization of positive pairs and the labelled tree T

Usage:
    from mcg_colorings.torus import canonicalize, factorize

    word = factorize(canonicalize(5, 3))   # TreeWord "121"
"""

from .lattice import (
    IDENTITY,
    R,
    R_INV,
    S,
    S_INV,
    GroupWord,
    IntMatrix2,
    Letter,
    Region,
    TorusCurve,
    apply,
    apply_word,
    ball,
    canonicalize,
    curve_sort_key,
    format_curve,
    orbit_rep_X1,
    parse_curve,
    r_orbit,
    region,
    sorted_curves,
    torus_intersection,
    torus_twist_matrix,
    twist_power,
)
from .tree import (
    ROOT,
    SPECIAL,
    TREE_EMITTERS,
    TreeVertex,
    TreeWord,
    children,
    emit_tree,
    enumerate_level,
    enumerate_level_vertices,
    evaluate,
    factorize,
    factorize_runs,
    factorize_subtractive,
    level_of,
    vertex_of,
    vertices_up_to,
    word_prefix,
)
