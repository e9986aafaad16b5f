"""Drawing-style predicates and the per-style constant table.

Each predicate returns a :class:`StyleReport`; a failing report always
carries a witness describing the offending edges.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .drawing import Drawing, _require_valid, lens_of_parallel_pair, max_multiplicity, parallel_pairs
from .errors import MissingParameter, NotSimple

STYLE_NAMES = ("separated", "locally-starlike", "single-crossing", "branching",
               "multiplicity", "girth")

# Constant for the girth style's general edge bound; there is no published value.
DEFAULT_GIRTH_EDGE_CONSTANT = Fraction(1)

# Bisection constant for the separated styles.
SEPARATED_BISECTION_CONSTANT = Fraction(44)


@dataclass(frozen=True)
class StyleReport:
    style: str
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class StyleParams:
    name: str
    k1: Fraction
    k2: Fraction
    k3: Fraction
    b: Fraction
    m: int | None = None
    r: int | None = None

    def __post_init__(self):
        if not self.b > 1:
            raise ValueError("b must exceed 1")
        if min(self.k1, self.k2, self.k3) <= 0:
            raise ValueError("k1, k2, k3 must be positive")

    @property
    def label(self) -> str:
        if self.name == "multiplicity":
            return f"multiplicity(m={self.m})"
        if self.name == "girth":
            return f"girth(r={self.r})"
        return self.name


def style_params(name: str, m: int | None = None, r: int | None = None,
                 girth_edge_constant=None) -> StyleParams:
    """Constants (k1, k2, k3, b) under which the generalized lemma applies."""
    k2 = SEPARATED_BISECTION_CONSTANT
    if name == "separated":
        return StyleParams(name, Fraction(3), k2, Fraction(1), Fraction(3))
    if name in ("locally-starlike", "branching"):
        return StyleParams(name, Fraction(3), k2, Fraction(1), Fraction(2))
    if name == "multiplicity":
        if m is None:
            raise MissingParameter("multiplicity style needs m")
        if m < 1:
            raise ValueError("m must be at least 1")
        return StyleParams(name, Fraction(3 * m), 2 * k2, Fraction(m), Fraction(2), m=m)
    if name == "girth":
        if r is None:
            raise MissingParameter("girth style needs r")
        if girth_edge_constant is None:
            raise MissingParameter("girth style needs the edge-count constant")
        if r < 1:
            raise ValueError("r must be at least 1")
        return StyleParams(name, Fraction(3), k2, Fraction(girth_edge_constant),
                           1 + Fraction(1, r), r=r)
    raise ValueError(f"unknown style {name!r}; choose from {', '.join(STYLE_NAMES)}")


# -- predicates ----------------------------------------------------------------

def is_separated(d: Drawing) -> StyleReport:
    for e1, e2 in parallel_pairs(d):
        try:
            lens = lens_of_parallel_pair(d, e1, e2)
        except NotSimple:
            return StyleReport("separated", False, {"pair": (e1, e2), "reason": "curves cross"})
        if not lens.interior_vertices:
            return StyleReport("separated", False, {"pair": (e1, e2), "reason": "no vertex inside"})
        if not lens.exterior_vertices:
            return StyleReport("separated", False, {"pair": (e1, e2), "reason": "no vertex outside"})
    return StyleReport("separated", True)


def is_locally_starlike(d: Drawing) -> StyleReport:
    """No two edges with a common endpoint cross."""
    an = _require_valid(d)
    for c in an.crossings:
        shared = d.edge(c.e1).endpoints & d.edge(c.e2).endpoints
        if shared:
            return StyleReport("locally-starlike", False,
                               {"pair": (c.e1, c.e2), "point": c.point,
                                "shared": tuple(sorted(shared))})
    return StyleReport("locally-starlike", True)


def is_single_crossing(d: Drawing) -> StyleReport:
    an = _require_valid(d)
    for (e1, e2), cs in an.by_pair.items():
        if len(cs) > 1:
            return StyleReport("single-crossing", False,
                               {"pair": (e1, e2), "crossings": len(cs),
                                "points": tuple(c.point for c in cs)})
    return StyleReport("single-crossing", True)


def is_branching(d: Drawing) -> StyleReport:
    for check in (is_separated, is_single_crossing, is_locally_starlike):
        rep = check(d)
        if not rep.holds:
            return StyleReport("branching", False, {"failed": rep.style, **rep.witness})
    return StyleReport("branching", True)


def girth(d: Drawing) -> float:
    """Shortest cycle length; a parallel pair counts as a 2-cycle, forests give inf."""
    if max_multiplicity(d) >= 2:
        return 2
    adj = {v: [] for v in d.vertices}
    for e in d.edges.values():
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    best = math.inf
    for root in adj:
        dist = {root: 0}
        via = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y, eid in adj[x]:
                if eid == via[x]:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = eid
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def satisfies_girth_style(d: Drawing, r: int) -> StyleReport:
    g = girth(d)
    holds = g > 2 * r
    return StyleReport(f"girth(r={r})", holds, None if holds else {"girth": g, "needs_more_than": 2 * r})


def satisfies_multiplicity_style(d: Drawing, m: int) -> StyleReport:
    for ends, bundle in d.bundles.items():
        if len(bundle) > m:
            return StyleReport(f"multiplicity(m={m})", False,
                               {"endpoints": tuple(sorted(ends)), "edges": tuple(bundle)})
    return StyleReport(f"multiplicity(m={m})", True)


def check_style(d: Drawing, name: str, m: int | None = None, r: int | None = None) -> StyleReport:
    """Evaluate a named style.

    ``locally-starlike`` here is the drawing style the constants table refers
    to: separated and locally starlike together.  Use
    :func:`is_locally_starlike` for the bare adjacency condition.
    """
    if name == "separated":
        return is_separated(d)
    if name == "locally-starlike":
        for check in (is_separated, is_locally_starlike):
            rep = check(d)
            if not rep.holds:
                return StyleReport("locally-starlike", False, {"failed": rep.style, **rep.witness})
        return StyleReport("locally-starlike", True)
    if name == "single-crossing":
        return is_single_crossing(d)
    if name == "branching":
        return is_branching(d)
    if name == "multiplicity":
        if m is None:
            raise MissingParameter("multiplicity style needs m")
        return satisfies_multiplicity_style(d, m)
    if name == "girth":
        if r is None:
            raise MissingParameter("girth style needs r")
        return satisfies_girth_style(d, r)
    raise ValueError(f"unknown style {name!r}")


def in_style(d: Drawing, params: StyleParams) -> StyleReport:
    return check_style(d, params.name, params.m, params.r)


def needs_separation(name: str) -> bool:
    """Styles whose parts may lose the style when vertices are dropped."""
    return name in ("separated", "locally-starlike", "branching")
