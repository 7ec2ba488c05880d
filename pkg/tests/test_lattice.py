from math import gcd

import pytest
from hypothesis import given, strategies as st

from mcg_colorings.errors import (
    DocumentError,
    IntegerOverflow,
    NonCanonical,
    NotPrimitive,
    NotUnimodular,
)
from mcg_colorings.torus import (
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
    orbit_rep_X1,
    parse_curve,
    r_orbit,
    torus_intersection,
    torus_twist_matrix,
    twist_power,
)

small = st.integers(min_value=-12, max_value=12)
letters = st.sampled_from(list(Letter))


@st.composite
def curves(draw):
    p = draw(small)
    q = draw(small)
    if gcd(p, q) != 1:
        p, q = 1, draw(small)
    return canonicalize(p, q)


def test_canonicalize_picks_sign():
    assert canonicalize(-1, -1) == TorusCurve(1, 1)
    assert canonicalize(1, -1) == TorusCurve(-1, 1)
    assert canonicalize(0, -1) == TorusCurve(0, 1)
    assert canonicalize(-1, 0) == TorusCurve(1, 0)
    assert canonicalize(3, -5) == TorusCurve(-3, 5)


@pytest.mark.parametrize("p,q", [(0, 0), (2, 4), (-6, 9)])
def test_canonicalize_rejects_non_primitive(p, q):
    with pytest.raises(NotPrimitive):
        canonicalize(p, q)


def test_constructor_rejects_wrong_sign():
    with pytest.raises(NonCanonical):
        TorusCurve(-1, -1)
    with pytest.raises(NonCanonical):
        TorusCurve(0, -1)


def test_regions():
    assert TorusCurve(1, 0).region is Region.X1
    assert TorusCurve(5, 3).region is Region.X1
    assert TorusCurve(0, 1).region is Region.X2
    assert TorusCurve(-1, 2).region is Region.X2
    assert TorusCurve(-1, 1).region is Region.X3
    assert TorusCurve(-2, 1).region is Region.X3


def test_parse_and_format():
    assert parse_curve("5/3") == TorusCurve(5, 3)
    assert parse_curve(" -3 / 5 ") == TorusCurve(-3, 5)
    assert parse_curve("3/-5") == TorusCurve(-3, 5)
    assert str(TorusCurve(-2, 1)) == "-2/1"
    with pytest.raises(DocumentError):
        parse_curve("five/three")
    with pytest.raises(NotPrimitive):
        parse_curve("2/4")


def test_generator_orders():
    minus_identity = (-1, 0, 0, -1)
    assert S.power(2).entries == minus_identity
    assert R.power(3).entries == minus_identity
    assert S.power(4) == IDENTITY
    assert (S @ S_INV) == IDENTITY
    assert (R_INV @ R) == IDENTITY


def test_matrix_must_be_unimodular():
    with pytest.raises(NotUnimodular):
        IntMatrix2(2, 0, 0, 1)


def test_generator_actions():
    assert apply(R, TorusCurve(1, 1)) == TorusCurve(-1, 2)
    assert apply(S, TorusCurve(1, 1)) == TorusCurve(-1, 1)
    assert apply(S, TorusCurve(1, 0)) == TorusCurve(0, 1)


def test_word_reading_order():
    # S^-1 R (p,q) = (p+q, q): the rightmost letter acts first
    word = GroupWord.parse("S^-1 R")
    assert word.letters == (Letter.S_INV, Letter.R)
    assert word.matrix() == S_INV @ R
    assert apply_word(word, TorusCurve(5, 3)) == TorusCurve(8, 3)
    assert apply_word(GroupWord.parse("S^-1 R R"), TorusCurve(5, 3)) == TorusCurve(5, 8)


def test_word_parse_variants():
    word = GroupWord.parse("S', R^-1,S R")
    assert word.letters == (Letter.S_INV, Letter.R_INV, Letter.S, Letter.R)
    assert str(word) == "S^-1 R^-1 S R"
    assert len(GroupWord.parse("")) == 0
    with pytest.raises(DocumentError):
        GroupWord.parse("S T")


@given(st.lists(letters, max_size=8), curves())
def test_word_action_matches_matrix_product(word_letters, x):
    word = GroupWord(tuple(word_letters))
    assert apply_word(word, x) == apply(word.matrix(), x)


@given(curves(), st.lists(letters, max_size=6), st.lists(letters, max_size=6))
def test_action_is_a_left_action(x, first, second):
    g, h = GroupWord(tuple(first)), GroupWord(tuple(second))
    assert apply(g.matrix(), apply(h.matrix(), x)) == apply(g.matrix() @ h.matrix(), x)


def test_orbit_representatives():
    assert orbit_rep_X1(TorusCurve(5, 3)) == (TorusCurve(5, 3), 0)
    assert orbit_rep_X1(TorusCurve(-1, 2)) == (TorusCurve(1, 1), 1)
    assert orbit_rep_X1(TorusCurve(-2, 1)) == (TorusCurve(1, 1), 2)
    assert orbit_rep_X1(TorusCurve(0, 1)) == (TorusCurve(1, 0), 1)
    assert r_orbit(TorusCurve(-2, 1)) == (TorusCurve(1, 1), TorusCurve(-1, 2), TorusCurve(-2, 1))


@given(curves())
def test_orbit_rep_reconstructs_curve(x):
    x1, j = orbit_rep_X1(x)
    assert x1.region is Region.X1
    assert apply(R.power(j), x1) == x


def test_intersection_and_twist_matrix():
    assert torus_intersection(TorusCurve(1, 0), TorusCurve(0, 1)) == 1
    assert torus_intersection(TorusCurve(5, 3), TorusCurve(2, 1)) == 1
    assert torus_twist_matrix(TorusCurve(1, 0)).entries == (1, -1, 0, 1)
    assert twist_power(TorusCurve(1, 0), TorusCurve(0, 1), 1) == TorusCurve(-1, 1)


@given(curves(), st.lists(letters, max_size=6), curves())
def test_twist_conjugation(x, word_letters, y):
    # f twist_x f^-1 = twist_f(x), checked pointwise
    f = GroupWord(tuple(word_letters)).matrix()
    lhs = apply(f, twist_power(x, y, 1))
    rhs = twist_power(apply(f, x), apply(f, y), 1)
    assert lhs == rhs


@given(curves(), curves())
def test_twist_fixes_exactly_disjoint_curves(x, y):
    fixed = twist_power(x, y, 1) == y
    assert fixed == (torus_intersection(x, y) == 0)
    if not fixed:
        orbit = {twist_power(x, y, n) for n in range(-20, 21)}
        assert len(orbit) == 41


def test_twist_matrix_overflow():
    with pytest.raises(IntegerOverflow):
        torus_twist_matrix(TorusCurve(2**32, 1))


def test_ball():
    assert ball(1) == (TorusCurve(1, 0), TorusCurve(1, 1), TorusCurve(0, 1), TorusCurve(-1, 1))
    assert all(x.max_norm <= 7 for x in ball(7))
    assert len(set(ball(7))) == len(ball(7))
    with pytest.raises(ValueError):
        ball(0)
