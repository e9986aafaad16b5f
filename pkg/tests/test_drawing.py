import itertools

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from corpus import naive_crossing_count
from crosslemma import constructions as C
from crosslemma.drawing import (LensKind, Drawing, Edge, crossing_number, crossings, edge_crossings,
                                edge_pair_crossings, empty_lenses, lenses, max_multiplicity,
                                multiplicity, parallel_pairs, validate_general_position)
from crosslemma.errors import InvariantViolation, UnknownEdge
from crosslemma.geometry import point

P = point


def _straight(vertices, pairs):
    return Drawing(vertices, [Edge(f"e{k}", u, v, (vertices[u], vertices[v]))
                              for k, (u, v) in enumerate(pairs)])


def test_x_drawing_counts():
    d = C.x_drawing()
    assert (d.n, d.e, crossing_number(d)) == (4, 2, 1)
    (c,) = crossings(d)
    assert c.point == P(1, 1)
    assert edge_crossings(d, "e1") == [c]


def test_loop_edge_rejected():
    with pytest.raises(InvariantViolation):
        Drawing({"a": P(0, 0)}, [Edge("e", "a", "a", (P(0, 0), P(1, 1), P(0, 0)))])


def test_curve_must_end_at_its_vertices():
    with pytest.raises(InvariantViolation):
        Drawing({"a": P(0, 0), "b": P(1, 0)}, [Edge("e", "a", "b", (P(0, 0), P(2, 0)))])


def test_unknown_edge():
    with pytest.raises(UnknownEdge):
        C.x_drawing().edge("nope")


@pytest.mark.parametrize("vertices, edges, kind", [
    ({"a": P(0, 0), "b": P(2, 0), "c": P(1, 0), "z": P(5, 5)},
     [("e", "a", "b", [(0, 0), (2, 0)]), ("f", "c", "z", [(1, 0), (5, 5)])], "VertexOnEdgeInterior"),
    ({"a": P(0, 0), "b": P(2, 0), "c": P(1, 1), "p": P(5, 5)},
     [("e", "a", "b", [(0, 0), (2, 0)]), ("f", "c", "p", [(1, 1), (1, 0), (5, 5)])], "NonProperTouch"),
    ({"a": P(0, 0), "b": P(4, 0), "c": P(1, 0), "z": P(3, 0)},
     [("e", "a", "b", [(0, 0), (1, 1), (3, 1), (4, 0)]), ("f", "c", "z", [(1, 0), (1, 1), (3, 1), (3, 0)])],
     "OverlappingEdges"),
    ({"a": P(0, 0), "b": P(2, 2), "c": P(0, 2), "d": P(2, 0), "g": P(1, 3), "h": P(1, -1)},
     [("e1", "a", "b", [(0, 0), (2, 2)]), ("e2", "c", "d", [(0, 2), (2, 0)]), ("e3", "g", "h", [(1, 3), (1, -1)])],
     "TripleCrossing"),
])
def test_validator_findings(vertices, edges, kind):
    d = Drawing(vertices, [Edge(i, u, v, tuple(P(*c) for c in cs)) for i, u, v, cs in edges])
    report = validate_general_position(d)
    assert not report.ok
    assert kind in report.kinds()
    with pytest.raises(InvariantViolation):
        crossing_number(d)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_convex_complete_crossings(n):
    from math import comb
    assert crossing_number(C.convex_complete(n)) == comb(n, 4)


def test_multiplicity_and_parallel_pairs():
    d = C.nested_parallel_triple()
    assert multiplicity(d, "u", "v") == 3
    assert max_multiplicity(d) == 3
    assert len(list(parallel_pairs(d))) == 3


def test_nested_lenses_have_vertices_on_both_sides():
    d = C.nested_parallel_triple()
    found = lenses(d, {LensKind.FULL_PARALLEL_PAIR})
    assert len(found) == 3
    assert all(lens.interior_vertices and lens.exterior_vertices for lens in found)
    assert empty_lenses(d) == []


@pytest.mark.parametrize("kind, lens_kind", [
    ("between-crossings", LensKind.BETWEEN_CROSSINGS),
    ("endpoint-to-crossing", LensKind.ENDPOINT_TO_CROSSING),
    ("full-parallel-pair", LensKind.FULL_PARALLEL_PAIR),
    ("separated-mixed", LensKind.BETWEEN_CROSSINGS),
])
def test_each_gadget_has_one_empty_lens(kind, lens_kind):
    (lens,) = empty_lenses(C.empty_lens_gadget(kind))
    assert lens.kind is lens_kind
    assert lens.is_empty


def test_double_crossing_pair():
    d = C.empty_lens_gadget("between-crossings")
    assert edge_pair_crossings(d, "e1", "e2") == 2


def test_without_edges_filters_crossings():
    d = C.convex_complete(6)
    drop = {"v0v2", "v1v4"}
    sub = d.without_edges(drop)
    expected = {(c.e1, c.e2, c.point) for c in crossings(d) if not {c.e1, c.e2} & drop}
    assert {(c.e1, c.e2, c.point) for c in crossings(sub)} == expected


# -- crossing oracle against brute force ---------------------------------------------------

lattice = st.tuples(st.integers(0, 12), st.integers(0, 12))


@st.composite
def straight_drawings(draw):
    locs = draw(st.lists(lattice, min_size=3, max_size=8, unique=True))
    vertices = {f"v{i}": P(*xy) for i, xy in enumerate(locs)}
    pairs = list(itertools.combinations(vertices, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=12, unique=True))
    return _straight(vertices, chosen)


@st.composite
def polyline_drawings(draw):
    locs = draw(st.lists(lattice, min_size=3, max_size=6, unique=True))
    vertices = {f"v{i}": P(*xy) for i, xy in enumerate(locs)}
    pairs = list(itertools.combinations(vertices, 2))
    edges = []
    for k in range(draw(st.integers(1, 6))):
        u, v = draw(st.sampled_from(pairs))
        bends = draw(st.lists(st.tuples(st.integers(-4, 16), st.integers(-4, 16)), max_size=2))
        curve = (vertices[u], *(P(x, y) for x, y in bends), vertices[v])
        if len(set(curve)) < len(curve):
            continue
        edges.append(Edge(f"e{k}", u, v, curve))
    try:
        return Drawing(vertices, edges)
    except InvariantViolation:
        assume(False)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(straight_drawings())
def test_crossing_count_matches_brute_force_straight(d):
    assume(validate_general_position(d).ok)
    assert crossing_number(d) == naive_crossing_count(d)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(polyline_drawings())
def test_crossing_count_matches_brute_force_polyline(d):
    assume(validate_general_position(d).ok)
    assert crossing_number(d) == naive_crossing_count(d)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_generator_is_valid(seed):
    d = C.random_polyline_drawing(6, 9, seed)
    assert validate_general_position(d).ok
    assert crossing_number(d) == naive_crossing_count(d)
