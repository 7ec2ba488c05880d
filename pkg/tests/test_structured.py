import pytest

from mcg_colorings.colorings import (
    StructuredColoring,
    color_of,
    construct,
    shallow_vertices,
    structural_color,
)
from mcg_colorings.errors import DuplicateColor, InvalidColoring, PaletteSize
from mcg_colorings.torus import R, SPECIAL, TorusCurve, apply, ball, enumerate_level


def test_shallow_vertices():
    assert shallow_vertices(0) == [SPECIAL]
    assert shallow_vertices(2) == [SPECIAL, TorusCurve(1, 1), TorusCurve(2, 1), TorusCurve(1, 2)]


def test_red_blue_layout(red_blue):
    assert red_blue.level == 1
    assert red_blue.anchors == ("red", "blue")
    assert red_blue.exception_map == {SPECIAL: "red", TorusCurve(1, 1): "red"}
    assert red_blue.anchor_map() == {"1": "red", "2": "blue"}


@pytest.mark.parametrize(
    "text,color",
    [("5/3", "red"), ("0/1", "red"), ("-3/5", "red"), ("1/2", "blue"), ("-2/1", "red"), ("2/1", "red")],
)
def test_red_blue_queries(red_blue, text, color):
    assert color_of(red_blue, TorusCurve.parse(text)) == color


def test_anchor_subtrees_are_monochromatic():
    c = construct(2, ["a", "b", "c", "d"])
    for index, label in enumerate(enumerate_level(2)):
        assert color_of(c, label) == "abcd"[index]
    # level 4 labels sit under their level 2 ancestors
    assert [color_of(c, x) for x in enumerate_level(4)] == [color for color in "abcd" for _ in range(4)]


def test_default_exceptions_follow_leftmost_anchor():
    c = construct(2, ["a", "b", "c", "d"])
    assert c.exception_map == {
        SPECIAL: "a",
        TorusCurve(1, 1): "a",
        TorusCurve(2, 1): "a",
        TorusCurve(1, 2): "c",
    }


def test_exception_override_in_construct(blue_special):
    assert blue_special.exception_map == {SPECIAL: "blue"}
    assert color_of(blue_special, TorusCurve(0, 1)) == "blue"
    assert color_of(blue_special, TorusCurve(-1, 1)) == "blue"
    assert color_of(blue_special, TorusCurve(1, 1)) == "red"


def test_construct_errors():
    with pytest.raises(PaletteSize):
        construct(1, ["red"])
    with pytest.raises(DuplicateColor):
        construct(1, ["red", "red"])
    with pytest.raises(InvalidColoring):
        construct(1, ["red", "blue"], {TorusCurve(2, 1): "green"})
    with pytest.raises(InvalidColoring):
        construct(-1, ["red"])
    with pytest.raises(InvalidColoring):
        construct(70, ["red"])


def test_coloring_validation():
    with pytest.raises(InvalidColoring):
        StructuredColoring(1, ("red",), ((SPECIAL, "red"), (TorusCurve(1, 1), "red")))
    with pytest.raises(InvalidColoring):
        StructuredColoring(1, ("red", "blue"), ((SPECIAL, "red"),))
    with pytest.raises(InvalidColoring):
        StructuredColoring(0, ("",), ((SPECIAL, "red"),))
    with pytest.raises(InvalidColoring):
        StructuredColoring.from_maps(1, {"1": "red"}, {SPECIAL: "red", TorusCurve(1, 1): "red"})
    with pytest.raises(InvalidColoring):
        StructuredColoring.from_maps(70, {"1": "red"}, {SPECIAL: "red"})
    with pytest.raises(InvalidColoring):
        StructuredColoring(25, ("red",), ((SPECIAL, "red"),))


def test_equal_data_compares_equal(red_blue):
    rebuilt = StructuredColoring.from_maps(
        1, {"2": "blue", "1": "red"}, {TorusCurve(1, 1): "red", SPECIAL: "red"}
    )
    assert rebuilt == red_blue


def test_overrides(red_blue):
    c = red_blue.with_overrides({TorusCurve(7, 5): "blue"})
    assert color_of(c, TorusCurve(7, 5)) == "blue"
    assert structural_color(c, TorusCurve(7, 5)) == "red"
    assert c.without_overrides() == red_blue
    assert c.colors() == {"red", "blue"}


def test_override_free_colorings_are_r_invariant(red_blue):
    for x in ball(15):
        assert color_of(red_blue, apply(R, x)) == color_of(red_blue, x)
