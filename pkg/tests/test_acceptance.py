"""
End-to-end checks of the headline properties, at the sizes they are stated for.
"""

import itertools
import random
from math import gcd

import numpy as np
import pytest

from mcg_colorings.cli import main
from mcg_colorings.colorings import (
    color_of,
    construct,
    defect,
    equivalent,
    is_trivial,
    loads_coloring,
    normalize,
    shallow_vertices,
    verify_ball,
)
from mcg_colorings.config import ToolkitConfig
from mcg_colorings.dehn_thurston import (
    DTMulticurve,
    LatticeColoring,
    SurfaceSpec,
    acts_trivially,
    all_sign_keys,
    common_future_check,
    future,
    lemma1_check,
    past,
    scan_window,
    shift_defect,
    string,
    twist,
)
from mcg_colorings.torus import (
    R,
    R_INV,
    S,
    Region,
    TorusCurve,
    apply,
    ball,
    evaluate,
    factorize,
    vertices_up_to,
)


def random_coloring(rng, k, overrides=0):
    palette = [f"c{i}" for i in range(2**k)]
    rng.shuffle(palette)
    recolor = {x: rng.choice(palette) for x in rng.sample(shallow_vertices(k), rng.randint(0, 2**k))}
    c = construct(k, palette, recolor)
    if overrides:
        targets = rng.sample(list(ball(6)), overrides)
        c = c.with_overrides({x: rng.choice(palette + ["extra"]) for x in targets})
    return c


def test_tree_factorization_is_a_bijection():
    for p in range(1, 501):
        for q in range(1, 501):
            if gcd(p, q) == 1:
                x = TorusCurve(p, q)
                assert evaluate(factorize(x)) == x
    labels = [v.label for v in vertices_up_to(14) if not v.is_special]
    assert len(labels) == 2**15 - 1
    assert len(set(labels)) == len(labels)


def test_region_identities():
    curves = ball(300)
    counts = {region: 0 for region in Region}
    for x in curves:
        counts[x.region] += 1
    assert sum(counts.values()) == len(curves)

    for x in curves:
        if x.region is Region.X1:
            assert apply(R, x).region is Region.X2
            assert apply(S, x).region is not Region.X1
        elif x.region is Region.X2:
            assert apply(R, x).region is Region.X3
            assert apply(R_INV, x).region is Region.X1
            assert apply(S, x).region is Region.X1
        else:
            assert apply(S, x).region is Region.X1


def test_defect_bound_and_certification():
    rng = random.Random(7)
    for trial in range(100):
        k = trial % 7
        c = random_coloring(rng, k)
        assert defect(c, "R").defect == ()
        s_defect = defect(c, "S").defect
        assert len(s_defect) <= 2 * 2 ** (k + 1)
        # Labels of level <= 6 have max-norm <= 21, so ball(40) already holds every defect
        assert all(x.max_norm <= 21 for x in s_defect)
        radius = 200 if trial < 7 else 40
        report = verify_ball(c, radius)
        assert report.consistent
        assert report.violations["S"] == s_defect


def test_worked_defect_values():
    blue_special = construct(0, ["red"], {TorusCurve(1, 0): "blue"})
    assert defect(blue_special, "S").defect == (TorusCurve(1, 1), TorusCurve(-1, 1))
    assert verify_ball(blue_special, 100).violations["S"] == (TorusCurve(1, 1), TorusCurve(-1, 1))

    red_blue = construct(1, ["red", "blue"])
    assert defect(red_blue, "S").defect == (TorusCurve(1, 2), TorusCurve(-2, 1))
    assert verify_ball(red_blue, 100).violations["S"] == (TorusCurve(1, 2), TorusCurve(-2, 1))


def test_normalization():
    rng = random.Random(11)
    for _ in range(100):
        c = random_coloring(rng, rng.randint(0, 3), overrides=rng.randint(0, 20))
        normal = normalize(c)
        assert normal.overrides == ()
        assert defect(normal, "R").defect == ()

        result = equivalent(c, normal)
        assert result.equivalent
        witness = set(result.witness)
        for x in witness:
            assert color_of(c, x) != color_of(normal, x)
        for x in ball(8):
            if x not in witness:
                assert color_of(c, x) == color_of(normal, x)

        assert normalize(normal) == normal


@pytest.mark.parametrize("k", range(7))
def test_many_color_colorings(capsys, k):
    palette = ",".join(f"c{i}" for i in range(2**k))
    assert main(["mkcolor", "--level", str(k), "--palette", palette]) == 0
    c = loads_coloring(capsys.readouterr().out)
    report = verify_ball(c, 300)
    assert report.consistent
    assert report.violations["R"] == ()
    assert len(defect(c, "S").defect) <= 2 * 2 ** (k + 1)
    assert is_trivial(c) == (k == 0)


def test_twist_engine():
    rng = random.Random(3)
    surfaces = [SurfaceSpec(1, 0), SurfaceSpec(2, 0), SurfaceSpec(2, 3), SurfaceSpec(4, 1)]
    for _ in range(1000):
        surface = rng.choice(surfaces)
        n = surface.pants_curves
        D = DTMulticurve(
            surface,
            tuple(rng.choice([0, rng.randint(1, 40)]) for _ in range(n)),
            tuple(rng.randint(-500, 500) for _ in range(n)),
        )
        k1, k2 = rng.randint(1, n), rng.randint(1, n)
        a, b = rng.randint(-40, 40), rng.randint(-40, 40)
        assert twist(D, k1, a + b) == twist(twist(D, k1, a), k1, b)
        assert twist(twist(D, k1, a), k2, b) == twist(twist(D, k2, b), k1, a)
        assert acts_trivially(D, k1) == (twist(D, k1, 1) == D) == (D.m[k1 - 1] == 0)
        window = string(D, k1, -50, 50)
        assert (len(set(window)) == 101) == (D.m[k1 - 1] > 0)


def _window_is_finite(c, axis):
    radius = c.bounding_radius + ToolkitConfig.LATTICE_MARGIN + 1
    codes, _ = scan_window(c, radius)
    changed = np.diff(codes, axis=axis - 1) != 0
    # a change on the outer ring means the defect runs off the window
    return changed.sum() == changed[1:-1, 1:-1].sum()


def test_lemma1_checker_against_window_scan():
    rng = random.Random(5)
    keys = all_sign_keys(2)
    for assignment in itertools.product("ab", repeat=4):
        sectors = dict(zip(keys, assignment))
        for _ in range(50):
            points = {(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(0, 6))}
            c = LatticeColoring.from_maps(2, sectors, {z: rng.choice("ab") for z in points})
            oracle = all(_window_is_finite(c, axis) for axis in (1, 2))
            assert oracle == all(shift_defect(c, axis).is_finite for axis in (1, 2))
            report = lemma1_check(c)
            assert report.passed == oracle
            if report.passed:
                assert future(c, 1) == past(c, 1)
                assert future(c, 2) == past(c, 2)
                assert common_future_check(c).passed
