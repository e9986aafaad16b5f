import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from corpus import arc
from crosslemma import constructions as C
from crosslemma.drawing import LensKind, crossing_number, empty_lenses, max_multiplicity, validate_general_position
from crosslemma.errors import ResolutionTooCoarse
from crosslemma.geometry import point
from crosslemma.styles import girth, is_separated


@pytest.mark.parametrize("n", [4, 5])
def test_arc_family_counts(n):
    d = arc(n)
    assert d.n == n
    assert d.e == comb(n, 2) * (n - 2)
    assert max_multiplicity(d) == n - 2
    assert validate_general_position(d).ok
    assert is_separated(d)
    assert empty_lenses(d, {LensKind.FULL_PARALLEL_PAIR}) == []


def test_arc_family_resolution_is_a_floor():
    coarse = C.separated_arc_construction(4, resolution=8)
    fine = C.separated_arc_construction(4, resolution=32)
    assert crossing_number(coarse) == crossing_number(fine)
    assert sum(len(e.curve) for e in fine.edges.values()) > sum(len(e.curve) for e in coarse.edges.values())


def test_arc_family_rejects_bad_arguments():
    with pytest.raises(ValueError):
        C.separated_arc_construction(2)
    with pytest.raises(ValueError):
        C.separated_arc_construction(4, resolution=4)


def test_resolution_too_coarse_is_reported(monkeypatch):
    monkeypatch.setattr(C, "MAX_RESOLUTION", 8)
    monkeypatch.setattr(C, "_arc_family_defects", lambda d, arcs, xy: [tuple(sorted(d.edges))[:2]])
    with pytest.raises(ResolutionTooCoarse):
        C.separated_arc_construction(4, resolution=8)


@pytest.mark.parametrize("n", [3, 5, 8, 11])
def test_parabola_points_not_concyclic(n):
    pts = C.parabola_points(n)
    assert len(set(pts)) == n
    assert all(p.y == p.x * p.x for p in pts)
    assert not any(C.concyclic(*q) for q in itertools.combinations(pts, 4))


def test_concyclic_detects_a_circle():
    assert C.concyclic(point(1, 0), point(0, 1), point(-1, 0), point(0, -1))
    # four points on y = x^2 whose parameters sum to zero
    assert C.concyclic(*(point(t, t * t) for t in (-2, -1, 1, 2)))


@pytest.mark.parametrize("r", [1, 2, 4])
def test_even_cycle(r):
    d = C.even_cycle(r)
    assert d.n == d.e == 2 * r + 2
    assert girth(d) == 2 * r + 2
    assert crossing_number(d) == 0


def test_straight_families():
    assert crossing_number(C.convex_complete(6)) == comb(6, 4)
    assert crossing_number(C.path_drawing(6)) == 0
    k33 = C.complete_bipartite(3, 3)
    assert (k33.n, k33.e) == (6, 9)
    two = C.two_cliques(5)
    assert two.n == 10 and validate_general_position(two).ok


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 9), st.integers(0, 12), st.integers(0, 10 ** 6))
def test_random_generator(n, e, seed):
    d = C.random_polyline_drawing(n, e, seed)
    assert (d.n, d.e) == (n, e)
    assert validate_general_position(d).ok
    assert d == C.random_polyline_drawing(n, e, seed)


def test_random_simple_option():
    d = C.random_polyline_drawing(6, 10, 3, allow_parallel=False)
    assert max_multiplicity(d) == 1


@pytest.mark.parametrize("n, seed", [(6, 0), (15, 4)])
def test_random_planar(n, seed):
    d = C.random_planar_drawing(n, seed)
    assert d.n == n
    assert crossing_number(d) == 0
    assert d.e <= 3 * n - 6


@pytest.mark.parametrize("kind", C.GADGET_KINDS)
def test_gadgets_have_one_empty_lens(kind):
    d = C.empty_lens_gadget(kind)
    assert validate_general_position(d).ok
    assert len(empty_lenses(d)) == 1


def test_unknown_gadget():
    with pytest.raises(ValueError):
        C.empty_lens_gadget("wobbly")


@pytest.mark.parametrize("family", C.FAMILIES)
def test_build_every_family(family):
    d = C.build(C.ConstructionSpec(family, 6, seed=1, e=8, r=2))
    assert validate_general_position(d).ok


def test_build_uses_parameters():
    assert C.build(C.ConstructionSpec("convex-complete", 5)).e == 10
    assert C.build(C.ConstructionSpec("even-cycle", 10)).n == 10
    assert C.build(C.ConstructionSpec("random", 7, seed=2, e=5)).e == 5
    with pytest.raises(ValueError):
        C.build(C.ConstructionSpec("spiral", 5))
    with pytest.raises(ValueError):
        C.ConstructionSpec("separated-arc", 5, resolution=2)
