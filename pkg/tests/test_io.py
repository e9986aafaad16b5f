import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from corpus import arc, corpus
from crosslemma import constructions as C
from crosslemma.drawing import Drawing, Edge, crossing_number
from crosslemma.errors import InvariantViolation, ParseError
from crosslemma.geometry import Point
from crosslemma.io import load_drawing, parse_drawing, render_svg, save_drawing, serialize_drawing

NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("name, d", corpus(), ids=lambda v: v if isinstance(v, str) else "")
def test_corpus_round_trip(name, d):
    text = serialize_drawing(d)
    back = parse_drawing(text)
    assert back == d
    assert serialize_drawing(back) == text


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(rationals, rationals), min_size=2, max_size=6, unique=True), st.data())
def test_round_trip_is_exact(locs, data):
    vertices = {f"v{i}": Point(Fraction(x), Fraction(y)) for i, (x, y) in enumerate(locs)}
    bends = data.draw(st.lists(st.tuples(rationals, rationals), max_size=3))
    curve = (vertices["v0"], *(Point(Fraction(x), Fraction(y)) for x, y in bends), vertices["v1"])
    try:
        d = Drawing(vertices, [Edge("e", "v0", "v1", curve)])
    except InvariantViolation:
        assume(False)
    assert parse_drawing(serialize_drawing(d), validate=False) == d


def test_file_round_trip(tmp_path):
    d = C.empty_lens_gadget("separated-mixed")
    path = tmp_path / "g.tmgd"
    save_drawing(d, path)
    assert load_drawing(path) == d


def test_comments_and_blank_lines():
    text = "# a drawing\n\nTMGD 1\nV a 0 0   # origin\nV b 1/2 -3\nE e a b 0 0 1/2 -3\n"
    d = parse_drawing(text)
    assert d.vertices["b"] == Point(Fraction(1, 2), Fraction(-3))
    assert d.e == 1


@pytest.mark.parametrize("text, line, col", [
    ("TMGD 1\nV a 1/0 0\n", 2, 5),
    ("TMGD 1\nV a 0 0.5\n", 2, 7),
    ("TMGD 2\n", 1, 1),
    ("V a 0 0\n", 1, 1),
    ("", 1, 1),
    ("TMGD 1\nV a 0 0\nV a 1 1\n", 3, 3),
    ("TMGD 1\nV a 0 0\nE e a b 0 0 1 1\n", 3, 7),
    ("TMGD 1\nQ x\n", 2, 1),
    ("TMGD 1\nV a 0 0\nV b 1 1\nE e a b 0 0 1\n", 4, 1),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_drawing(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_loop_edge_is_an_invariant_violation():
    with pytest.raises(InvariantViolation):
        parse_drawing("TMGD 1\nV a 0 0\nE e a a 0 0 1 1 0 0\n")


def test_general_position_checked_unless_disabled():
    text = ("TMGD 1\nV a 0 0\nV b 2 0\nV c 1 0\nV z 5 5\n"
            "E e a b 0 0 2 0\nE f c z 1 0 5 5\n")
    with pytest.raises(InvariantViolation) as info:
        parse_drawing(text)
    assert "VertexOnEdgeInterior" in {f.kind for f in info.value.findings}
    assert parse_drawing(text, validate=False).e == 2


# -- svg ------------------------------------------------------------------------------

def _svg(text):
    root = ET.fromstring(text.split("\n", 1)[1])
    return root, {g.get("class"): list(g) for g in root.iter(NS + "g")}


def test_svg_of_x():
    text = render_svg(C.x_drawing())
    root, groups = _svg(text)
    assert root.tag == NS + "svg"
    assert len(groups["edges"]) == 2
    assert len(groups["vertices"]) == 4
    assert len(groups["crossings"]) == 1
    assert "<!-- source sha256 " in text


def test_svg_crossings_can_be_hidden():
    _, groups = _svg(render_svg(C.x_drawing(), show_crossings=False))
    assert "crossings" not in groups


def test_svg_lenses():
    _, groups = _svg(render_svg(C.empty_lens_gadget("between-crossings"), shade_lenses=True))
    assert len(groups["lenses"]) == 1


def test_svg_empty_drawing():
    root, groups = _svg(render_svg(Drawing({})))
    assert root.tag == NS + "svg" and groups["edges"] == []


def test_svg_arc_family():
    d = arc(4)
    _, groups = _svg(render_svg(d))
    assert len(groups["edges"]) == d.e == 12
    assert len(groups["crossings"]) == crossing_number(d)


def test_svg_is_deterministic_and_hashes_source():
    d = C.convex_complete(5)
    assert render_svg(d) == render_svg(d)
    assert render_svg(d, source="abc") != render_svg(d)
    assert render_svg(d, width=300).count('width="300"') == 1


@pytest.mark.parametrize("bad", ["a b", "a#1", ""])
def test_unwritable_ids_are_rejected(bad):
    d = Drawing({bad: Point(Fraction(0), Fraction(0))})
    with pytest.raises(ValueError):
        serialize_drawing(d)
