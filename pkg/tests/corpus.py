"""Shared drawings for the test suite, plus a brute-force crossing counter."""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from crosslemma import constructions as C
from crosslemma.transforms import remove_until_crossing_free

GADGETS = C.GADGET_KINDS


@lru_cache(maxsize=None)
def arc(n: int):
    return C.separated_arc_construction(n)


@lru_cache(maxsize=None)
def arc_crossing_free(n: int):
    return remove_until_crossing_free(arc(n))


@lru_cache(maxsize=None)
def corpus() -> tuple:
    """(name, drawing) pairs; arc family members are shared with the cache above."""
    items = [("x", C.x_drawing()), ("path5", C.path_drawing(5)), ("two_cliques5", C.two_cliques(5)),
             ("k33", C.complete_bipartite(3, 3)), ("nested_triple", C.nested_parallel_triple())]
    items += [(f"convex{n}", C.convex_complete(n)) for n in range(4, 9)]
    items += [(f"cycle{2 * r + 2}", C.even_cycle(r)) for r in (1, 2, 3)]
    items += [(f"gadget-{k}", C.empty_lens_gadget(k)) for k in GADGETS]
    items += [(f"arc{n}", arc(n)) for n in range(4, 9)]
    items += [(f"arc{n}-planar", arc_crossing_free(n)) for n in range(4, 9)]
    items += [(f"random6-9-s{s}", C.random_polyline_drawing(6, 9, s)) for s in (1, 2, 3)]
    items += [(f"random10-20-s{s}", C.random_polyline_drawing(10, 20, s)) for s in (4, 5)]
    items += [("random12-18-s6", C.random_polyline_drawing(12, 18, 6))]
    items += [(f"planar{n}-s{s}", C.random_planar_drawing(n, s)) for n, s in ((8, 0), (10, 1), (12, 2))]
    return tuple(items)


def _orient(o, a, b) -> int:
    v = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    return (v > 0) - (v < 0)


def naive_crossing_count(d) -> int:
    """Distinct proper crossing points between every pair of edges, segment by segment.

    Independent of the library's sweep: plain orientation tests on every pair
    of segments, with intersection points collected per edge pair so a crossing
    at a bend is counted once.
    """
    total = 0
    for e1, e2 in itertools.combinations(d.edges.values(), 2):
        found = set()
        for a, b in zip(e1.curve, e1.curve[1:]):
            for c, dd in zip(e2.curve, e2.curve[1:]):
                o1, o2 = _orient(a, b, c), _orient(a, b, dd)
                o3, o4 = _orient(c, dd, a), _orient(c, dd, b)
                shared = {a, b} & {c, dd}
                if shared:
                    continue
                if o1 * o2 <= 0 and o3 * o4 <= 0 and 0 not in (o1, o2, o3, o4):
                    den = (b.x - a.x) * (dd.y - c.y) - (b.y - a.y) * (dd.x - c.x)
                    t = Fraction((c.x - a.x) * (dd.y - c.y) - (c.y - a.y) * (dd.x - c.x)) / den
                    found.add((a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
        total += len(found)
    return total
