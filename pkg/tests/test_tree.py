import json
from math import gcd

import pytest
from hypothesis import given, strategies as st

from mcg_colorings.errors import DocumentError, NotInPositiveQuadrant, SpecialVertex
from mcg_colorings.torus import (
    ROOT,
    SPECIAL,
    TorusCurve,
    TreeWord,
    children,
    emit_tree,
    enumerate_level,
    evaluate,
    factorize,
    factorize_runs,
    factorize_subtractive,
    level_of,
    vertex_of,
    vertices_up_to,
    word_prefix,
)


@st.composite
def positive_curves(draw):
    p = draw(st.integers(min_value=1, max_value=10**4))
    q = draw(st.integers(min_value=1, max_value=10**4))
    g = gcd(p, q)
    return TorusCurve(p // g, q // g)


def test_worked_factorizations():
    assert str(factorize(TorusCurve(5, 3))) == "121"
    assert str(factorize(TorusCurve(1, 1))) == ""
    assert str(factorize(TorusCurve(7, 5))) == "1221"
    assert level_of(TorusCurve(7, 5)) == 4
    assert factorize_runs(TorusCurve(5, 3)) == ((1, 1), (2, 1), (1, 1))
    assert factorize_runs(TorusCurve(10, 1)) == ((1, 9),)


def test_evaluate():
    assert evaluate(TreeWord.parse("121")) == TorusCurve(5, 3)
    assert evaluate(TreeWord.parse("")) == ROOT
    assert evaluate(TreeWord.parse("2222")) == TorusCurve(1, 5)


@pytest.mark.parametrize("curve", [SPECIAL, TorusCurve(0, 1), TorusCurve(-2, 1)])
def test_factorize_outside_positive_quadrant(curve):
    with pytest.raises(NotInPositiveQuadrant):
        factorize(curve)


def test_bad_words():
    with pytest.raises(DocumentError):
        TreeWord.parse("13")
    with pytest.raises(DocumentError):
        TreeWord((0,))


def test_word_index_order():
    assert TreeWord.parse("212").index == 5
    assert str(TreeWord.from_index(3, 5)) == "212"
    assert [str(TreeWord.from_index(2, i)) for i in range(4)] == ["11", "12", "21", "22"]


def test_levels_in_order():
    assert enumerate_level(0) == [ROOT]
    assert enumerate_level(1) == [TorusCurve(2, 1), TorusCurve(1, 2)]
    assert enumerate_level(2) == [TorusCurve(3, 1), TorusCurve(2, 3), TorusCurve(3, 2), TorusCurve(1, 3)]


def test_special_vertex():
    vertex = vertex_of(SPECIAL)
    assert vertex.is_special
    assert vertex.level == -1
    assert level_of(SPECIAL) == -1
    with pytest.raises(SpecialVertex):
        children(vertex)


def test_word_prefix():
    x = TorusCurve(5, 3)
    assert str(word_prefix(x, 0)) == ""
    assert str(word_prefix(x, 2)) == "12"
    assert word_prefix(x, 3) == factorize(x)
    with pytest.raises(ValueError):
        word_prefix(x, 4)


@given(positive_curves())
def test_factorize_evaluate_round_trip(x):
    word = factorize(x)
    assert evaluate(word) == x
    assert level_of(x) == len(word)


def test_runs_agree_with_subtraction():
    for p in range(1, 61):
        for q in range(1, 61):
            if gcd(p, q) == 1:
                x = TorusCurve(p, q)
                assert factorize(x) == factorize_subtractive(x)


def test_vertices_up_to():
    vertices = vertices_up_to(2)
    assert len(vertices) == 8
    assert vertices[0].is_special
    assert [v.level for v in vertices] == [-1, 0, 1, 1, 2, 2, 2, 2]


def test_tree_json():
    payload = json.loads(emit_tree(2, "json"))
    assert len(payload["vertices"]) == 8
    assert payload["vertices"][0] == {"word": "-", "label": "1/0", "level": -1}
    assert payload["edges"][0] == ["-", ""]
    assert ["1", "12"] in payload["edges"]


def test_tree_dot_depth_zero():
    text = emit_tree(0, "dot")
    assert text == (
        "digraph T {\n"
        '  "1/0" [level=-1];\n'
        '  "1/1" [level=0];\n'
        '  "1/0" -> "1/1";\n'
        "}\n"
    )


def test_tree_output_is_stable():
    assert emit_tree(4, "json") == emit_tree(4, "json")
    assert emit_tree(4, "dot") == emit_tree(4, "dot")
    with pytest.raises(DocumentError):
        emit_tree(1, "yaml")
