import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import arc, corpus
from crosslemma import constructions as C
from crosslemma.decomposition import (ORACLE_LIMIT, balanced, bisection_heuristic, bisection_width_oracle,
                                      check_bisection_inequality, decompose, stop_condition)
from crosslemma.drawing import Drawing, Edge, max_multiplicity
from crosslemma.errors import NoFeasibleBipartition, StyleViolation, TooLargeForOracle
from crosslemma.geometry import point as P
from crosslemma.styles import StyleParams, check_style, is_separated, style_params


def _style_of(d):
    if is_separated(d):
        return "separated", None
    return "multiplicity", max_multiplicity(d)


def test_balance_rule():
    assert balanced(1, 5) and balanced(4, 5)
    assert not balanced(0, 5) and not balanced(1, 6)
    assert balanced(2, 10) and not balanced(9, 10)


# -- oracle -----------------------------------------------------------------------------

def test_single_edge():
    d = Drawing({"a": P(0, 0), "b": P(1, 0)}, [Edge("e", "a", "b", (P(0, 0), P(1, 0)))])
    width, bp = bisection_width_oracle(d, "multiplicity", 1)
    assert width == 1 and bp.cut == ("e",)


@pytest.mark.parametrize("make, width", [
    (C.x_drawing, 0),
    (lambda: C.path_drawing(5), 1),
    (lambda: C.two_cliques(5), 1),
])
def test_oracle_small_widths(make, width):
    d = make()
    assert bisection_width_oracle(d, "multiplicity", max_multiplicity(d) or 1)[0] == width


def test_nested_triple_pays_for_a_repair():
    d = C.nested_parallel_triple()
    width, bp = bisection_width_oracle(d, "separated")
    assert width == 1
    # Any balanced split strands an empty lens or cuts an edge; one removal suffices.
    for side in (bp.part1, bp.part2):
        assert check_style(d.induced(side, bp.removed), "separated")
    # Without the separation requirement the same drawing costs nothing.
    assert bisection_width_oracle(d, "multiplicity", 3)[0] == 0


def test_oracle_parts_are_balanced_and_cover_the_vertices():
    d = C.convex_complete(7)
    width, bp = bisection_width_oracle(d, "multiplicity", 1)
    assert sorted(bp.part1 + bp.part2) == sorted(d.vertices)
    assert balanced(len(bp.part1), d.n)
    # the smaller side needs at least 7/5 vertices, so the best split is 2 | 5
    assert width == bp.width == len(bp.cut) == 2 * 5
    assert not bp.repair


def test_oracle_limits():
    with pytest.raises(TooLargeForOracle):
        bisection_width_oracle(C.path_drawing(ORACLE_LIMIT + 1), "multiplicity", 1)
    with pytest.raises(NoFeasibleBipartition):
        bisection_width_oracle(Drawing({"a": P(0, 0)}), "multiplicity", 1)
    with pytest.raises(NoFeasibleBipartition):
        bisection_heuristic(Drawing({"a": P(0, 0)}), "multiplicity", 1)


# -- heuristic against the oracle --------------------------------------------------------

@pytest.mark.parametrize("name, d", [(n, d) for n, d in corpus() if d.n <= 12], ids=lambda v: v if isinstance(v, str) else "")
def test_heuristic_within_factor_three(name, d):
    style, m = _style_of(d)
    exact = bisection_width_oracle(d, style, m)[0]
    width, bp = bisection_heuristic(d, style, m)
    assert exact <= width <= 3 * exact
    assert width == bp.width
    assert balanced(len(bp.part1), d.n)


def test_heuristic_balanced_cut_on_k33():
    d = C.complete_bipartite(3, 3)
    width, bp = bisection_heuristic(d, "multiplicity", 1)
    assert width == bisection_width_oracle(d, "multiplicity", 1)[0]
    assert 2 <= len(bp.part1) <= 4


def test_heuristic_beyond_oracle_limit():
    d = C.random_polyline_drawing(30, 45, 3)
    width, bp = bisection_heuristic(d, "multiplicity", max_multiplicity(d))
    assert balanced(len(bp.part1), d.n)
    assert width <= d.e


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 5))
def test_heuristic_never_beats_oracle(seed):
    d = C.random_polyline_drawing(7, 11, seed)
    style, m = _style_of(d)
    assert bisection_heuristic(d, style, m)[0] >= bisection_width_oracle(d, style, m)[0]


# -- bisection inequality -------------------------------------------------------------------

def test_inequality_on_x():
    chk = check_bisection_inequality(C.x_drawing(), "separated")
    assert chk.holds and chk.width == 0
    assert chk.rhs == pytest.approx(44 * math.sqrt(1 + 1 * 2 + 4))


def test_inequality_on_arc5():
    d = arc(5)
    chk = check_bisection_inequality(d, "separated")
    assert chk.holds and chk.margin > 0
    assert chk.width <= d.e


def test_inequality_can_fail_with_tiny_constant():
    chk = check_bisection_inequality(C.convex_complete(6), "multiplicity", k2=Fraction(1, 10), m=1)
    assert not chk.holds and chk.margin < 0


# -- decomposition --------------------------------------------------------------------------

def test_stop_rule_exact():
    p = style_params("multiplicity", m=1)   # x = 1
    # (4/5)^i < e / (2 n^2)  with n = 10, e = 100: rhs = 1/2
    assert not stop_condition(3, 10, 100, p)  # 0.512
    assert stop_condition(4, 10, 100, p)      # 0.4096


def test_immediate_stop():
    params = StyleParams("multiplicity", Fraction(3), Fraction(88), Fraction(1, 100), Fraction(2), m=1)
    trace = decompose(C.convex_complete(5), params)
    assert trace.k == 0 and len(trace.steps) == 1
    assert trace.steps[0].stop and trace.removed_total == 0


def test_k8_size_and_count_bounds():
    d = C.convex_complete(8)
    trace = decompose(d, style_params("multiplicity", m=1))
    assert trace.invariants_hold
    for s in trace.steps:
        assert all(p.n <= s.size_ceiling for p in s.parts)
        assert s.big_parts <= Fraction(5, 4) ** (s.i + 1)
        assert s.big_parts == sum(1 for p in s.parts if p.n >= s.size_floor)


@pytest.mark.parametrize("make, style", [
    (lambda: C.convex_complete(8), style_params("multiplicity", m=1)),
    (lambda: arc(5), style_params("separated")),
    (lambda: C.nested_parallel_triple(), style_params("separated")),
])
def test_parts_partition_vertices(make, style):
    d = make()
    trace = decompose(d, style)
    for s in trace.steps:
        seen = [v for p in s.parts for v in p.vertices]
        assert sorted(seen) == sorted(d.vertices)
    widths = sum(p.width for s in trace.steps for p in s.parts if p.width is not None)
    assert trace.removed_total == widths
    assert len({e for s in trace.steps for e in s.removed}) == trace.removed_total


def test_step_count_bounded_when_dense():
    d = arc(6)
    params = style_params("separated")
    assert d.e > 2 * params.k3 * d.n
    trace = decompose(d, params)
    assert trace.k <= math.log(d.n, 5 / 4)
    assert trace.steps[-1].stop


def test_heuristic_cutter_agrees_on_invariants():
    trace = decompose(C.convex_complete(7), style_params("multiplicity", m=1), cutter="heuristic")
    assert trace.invariants_hold and trace.cutter == "heuristic"


def test_decompose_rejects_bad_input():
    with pytest.raises(StyleViolation):
        decompose(C.empty_lens_gadget("full-parallel-pair"), style_params("separated"))
    with pytest.raises(ValueError):
        decompose(C.x_drawing(), style_params("separated"), cutter="magic")
    with pytest.raises(ValueError):
        decompose(Drawing({"a": P(0, 0)}), style_params("separated"))


def test_trace_text():
    trace = decompose(C.convex_complete(6), style_params("multiplicity", m=1))
    text = trace.to_text()
    assert text.startswith("# decomposition style=")
    assert text.count("\nstep ") == len(trace.steps)
    assert text.splitlines()[-1].startswith(f"k={trace.k} removed_total={trace.removed_total}")
