"""Drawing surgeries: edge removal, vertex splitting, lens rerouting, planarization.

All transforms return new drawings.  Where new geometry has to be invented
(offset curves, split locations) it is built in floating point, snapped to
rationals, and then checked exactly; a failed check shrinks the construction
and tries again.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .drawing import (
    ALL_LENS_KINDS,
    Drawing,
    Edge,
    Lens,
    LensKind,
    Position,
    _require_valid,
    crossing_number,
    crossing_pairs,
    edge_crossings,
    empty_lenses,
    point_at,
    subcurve,
    validate_general_position,
)
from .errors import (
    ClearanceViolation,
    InvariantViolation,
    IterationLimitExceeded,
    NonContiguousGroups,
    UnknownEdge,
    UnknownVertex,
)
from .geometry import Point, signed_area2, snap

# Attempts (each halving the offset or split radius) before giving up on a lens or split.
SHRINK_ATTEMPTS = 40


def _f(p: Point) -> np.ndarray:
    return np.array([float(p.x), float(p.y)])


def _unit(v: np.ndarray) -> np.ndarray:
    return v / math.hypot(v[0], v[1])


def _left(d: np.ndarray) -> np.ndarray:
    return np.array([-d[1], d[0]])


def _grid_for(scale: float) -> int:
    """Power-of-two denominator fine enough to place points at ``scale``."""
    return 2 ** max(20, math.ceil(math.log2(1e4 / scale)))


def _snap_point(p: np.ndarray, grid: int) -> Point:
    return Point(snap(p[0], grid), snap(p[1], grid))


# -- edge removal ----------------------------------------------------------------

def remove_edges(d: Drawing, eids: Iterable[str]) -> Drawing:
    """The drawing without ``eids``; its crossings are the old ones among kept edges."""
    drop = set(eids)
    for eid in drop:
        if eid not in d.edges:
            raise UnknownEdge(eid)
    return d.without_edges(drop)


def remove_until_crossing_free(d: Drawing) -> Drawing:
    """Greedily drop the edge with the most remaining crossings until none are left."""
    an = _require_valid(d)
    partners: dict[str, dict[str, int]] = {eid: {} for eid in d.edges}
    for c in an.crossings:
        partners[c.e1][c.e2] = partners[c.e1].get(c.e2, 0) + 1
        partners[c.e2][c.e1] = partners[c.e2].get(c.e1, 0) + 1
    load = {eid: sum(p.values()) for eid, p in partners.items()}
    order = an.edge_order
    dropped = []
    while True:
        worst = max(load, key=lambda eid: (load[eid], -order[eid]))
        if load[worst] == 0:
            break
        dropped.append(worst)
        for other, k in partners.pop(worst).items():
            load[other] -= k
            del partners[other][worst]
        del load[worst]
    return d.without_edges(dropped)


# -- rotation order ------------------------------------------------------------------

def _first_direction(e: Edge, v: str) -> tuple[Fraction, Fraction]:
    a, b = (e.curve[0], e.curve[1]) if e.u == v else (e.curve[-1], e.curve[-2])
    return b.x - a.x, b.y - a.y


def _angle_cmp(p, q) -> int:
    """Counterclockwise comparison of direction vectors, starting at angle 0."""
    def half(v):
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1
    hp, hq = half(p), half(q)
    if hp != hq:
        return hp - hq
    c = p[0] * q[1] - p[1] * q[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _lex_unit_key(v):
    """Sort key equal to the lexicographic order of the unit vector v/|v|."""
    x, y = v
    norm2 = x * x + y * y
    sx = (x * x / norm2) * (1 if x > 0 else -1)
    sy = (y * y / norm2) * (1 if y > 0 else -1)
    return sx, sy


def rotation(d: Drawing, v: str) -> list[str]:
    """Incident edge ids in counterclockwise order around ``v``.

    The list starts at the edge whose unit direction is lexicographically
    smallest, which makes the order (and every split built on it)
    deterministic.
    """
    if v not in d.vertices:
        raise UnknownVertex(v)
    inc = [d.edge(eid) for eid in d.incidence[v]]
    dirs = {e.id: _first_direction(e, v) for e in inc}
    ccw = sorted(dirs, key=functools.cmp_to_key(lambda a, b: _angle_cmp(dirs[a], dirs[b])))
    if not ccw:
        return []
    start = min(ccw, key=lambda eid: _lex_unit_key(dirs[eid]))
    k = ccw.index(start)
    return ccw[k:] + ccw[:k]


# -- vertex splitting ---------------------------------------------------------------

@dataclass(frozen=True)
class SplitPlan:
    """Split ``v`` into two vertices: ``v`` keeps ``group1`` and moves to ``loc1``;
    a new vertex ``new_id`` takes ``group2`` at ``loc2``."""
    v: str
    group1: tuple[str, ...]
    group2: tuple[str, ...]
    loc1: Point
    loc2: Point
    new_id: str


def _contiguous(order: Sequence[str], group: set) -> bool:
    """Whether ``group`` is one cyclic interval of ``order``."""
    if not group or len(group) == len(order):
        return True
    flags = [x in group for x in order]
    starts = sum(1 for i in range(len(flags)) if flags[i] and not flags[i - 1])
    return starts == 1


def _clearance(d: Drawing, v: str) -> float:
    """Radius of a disk around ``v`` met only by the first segments of its edges.

    Covers other vertices, every segment that does not start at ``v`` and
    every crossing on the starting segments; the result is halved.
    """
    p = _f(d.vertices[v])
    best = math.inf
    for w, q in d.vertices.items():
        if w != v:
            best = min(best, float(np.hypot(*(_f(q) - p))))
    first_segments = set()
    for eid in d.incidence[v]:
        e = d.edge(eid)
        k = 0 if e.u == v else len(e.curve) - 2
        first_segments.add((eid, k))
        best = min(best, float(np.hypot(*(_f(e.curve[k + 1]) - _f(e.curve[k])))))
        for c in edge_crossings(d, eid):
            if c.position_on(eid)[0] == k:
                best = min(best, float(np.hypot(*(_f(c.point) - p))))
    for e in d.edges.values():
        for k, (a, b) in enumerate(e.segments()):
            if (e.id, k) in first_segments:
                continue
            best = min(best, _point_segment_distance(p, _f(a), _f(b)))
    return best / 2


def _point_segment_distance(p, a, b) -> float:
    ab = b - a
    t = float(np.clip(np.dot(p - a, ab) / np.dot(ab, ab), 0.0, 1.0))
    return float(np.hypot(*(a + t * ab - p)))


def _cut_position(e: Edge, v: str, radius: float) -> tuple[Position, Point]:
    """Position and point on the first segment of ``e`` at ``v``, ``radius`` away."""
    if e.u == v:
        a, b, seg = e.curve[0], e.curve[1], 0
    else:
        a, b, seg = e.curve[-1], e.curve[-2], len(e.curve) - 2
    length = float(np.hypot(*(_f(b) - _f(a))))
    t = Fraction(round(radius / length * 2 ** 40), 2 ** 40)
    t = min(max(t, Fraction(1, 2 ** 40)), Fraction(1, 2))
    pt = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    pos = (seg, t) if e.u == v else (seg, 1 - t)
    return pos, pt


def _reattach(e: Edge, v: str, new_v: str, loc: Point, cut: tuple[Position, Point]) -> Edge:
    pos, pt = cut
    if e.u == v:
        rest = subcurve(e.curve, pos, (len(e.curve) - 2, Fraction(1)))
        return Edge(e.id, new_v, e.v, (loc, *rest))
    rest = subcurve(e.curve, (0, Fraction(0)), pos)
    return Edge(e.id, e.u, new_v, (*rest, loc))


def _group_bisector(d: Drawing, v: str, group: Sequence[str]) -> np.ndarray:
    """Unit vector halving the counterclockwise sector spanned by a contiguous group."""
    angs = []
    for eid in group:
        dx, dy = _first_direction(d.edge(eid), v)
        angs.append(math.atan2(float(dy), float(dx)))
    if len(angs) == 1:
        return np.array([math.cos(angs[0]), math.sin(angs[0])])
    span = (angs[-1] - angs[0]) % (2 * math.pi)
    mid = angs[0] + span / 2
    return np.array([math.cos(mid), math.sin(mid)])


def _ordered_groups(order: list[str], groups: Sequence[Sequence[str]]) -> list[list[str]]:
    """Each group listed counterclockwise from its first edge in the cyclic order."""
    out = []
    for g in groups:
        gs = set(g)
        if not gs:
            out.append([])
            continue
        k = next(i for i in range(len(order)) if order[i] in gs and order[i - 1] not in gs) \
            if len(gs) < len(order) else 0
        rolled = order[k:] + order[:k]
        out.append([x for x in rolled if x in gs])
    return out


def _apply_split(d: Drawing, v: str, groups: list[list[str]], ids: list[str],
                 locs: list[Point], radius: float) -> Drawing:
    vertices = {w: p for w, p in d.vertices.items() if w != v}
    for vid, loc in zip(ids, locs):
        if vid in vertices:
            raise InvariantViolation(f"vertex id {vid!r} already in use")
        vertices[vid] = loc
    new_edges = {}
    for vid, loc, g in zip(ids, locs, groups):
        for eid in g:
            e = d.edge(eid)
            new_edges[eid] = _reattach(e, v, vid, loc, _cut_position(e, v, radius))
    return Drawing(vertices, [new_edges.get(e.id, e) for e in d.edges.values()])


def _split_ok(before: Drawing, after: Drawing) -> bool:
    if not validate_general_position(after).ok:
        return False
    return crossing_number(after) == crossing_number(before)


def _split_into(d: Drawing, v: str, groups: list[list[str]], ids: list[str],
                locs: list[Point] | None = None) -> Drawing:
    """Replace ``v`` by one vertex per group.  Groups must be contiguous."""
    order = rotation(d, v)
    covered = [x for g in groups for x in g]
    if sorted(covered) != sorted(order):
        raise NonContiguousGroups(f"groups do not partition the edges at {v!r}")
    for g in groups:
        if not _contiguous(order, set(g)):
            raise NonContiguousGroups(f"group {sorted(g)} is not contiguous around {v!r}")
    groups = _ordered_groups(order, groups)
    _require_valid(d)
    radius = _clearance(d, v)
    center = _f(d.vertices[v])
    if locs is not None:
        for loc in locs:
            if float(np.hypot(*(_f(loc) - center))) >= radius:
                raise ClearanceViolation(f"split location {loc} is outside the clearance disk of {v!r}")
        out = _apply_split(d, v, groups, ids, locs, radius)
        if not _split_ok(d, out):
            raise ClearanceViolation(f"split of {v!r} at the given locations changes the drawing")
        return out
    grid = _grid_for(radius)
    dist = radius / 2
    for _ in range(SHRINK_ATTEMPTS):
        pts = []
        for k, g in enumerate(groups):
            if g:
                direction = _group_bisector(d, v, g)
            else:
                ang = 2 * math.pi * (k + 0.5) / len(groups)
                direction = np.array([math.cos(ang), math.sin(ang)])
            pts.append(_snap_point(center + dist * direction, grid))
        if len(set(pts)) == len(pts):
            try:
                out = _apply_split(d, v, groups, ids, pts, radius)
            except InvariantViolation:
                out = None
            if out is not None and _split_ok(d, out):
                return out
        dist /= 2
        grid *= 2
    raise ClearanceViolation(f"no clearance-safe split found at {v!r}")


def _fresh_id(d: Drawing, base: str, taken: set) -> str:
    k = 1
    while f"{base}+{k}" in d.vertices or f"{base}+{k}" in taken:
        k += 1
    taken.add(f"{base}+{k}")
    return f"{base}+{k}"


def plan_split(d: Drawing, v: str, group1: Sequence[str], group2: Sequence[str]) -> SplitPlan:
    """Choose clearance-safe locations for splitting ``v`` into the two groups."""
    new_id = _fresh_id(d, v, set())
    out = _split_into(d, v, [list(group1), list(group2)], [v, new_id])
    return SplitPlan(v, tuple(group1), tuple(group2), out.vertices[v], out.vertices[new_id], new_id)


def vertex_split(d: Drawing, plan: SplitPlan) -> Drawing:
    """Apply a split plan: ``v`` keeps group1 at loc1, the new vertex gets group2 at loc2.

    Every edge is cut inside the clearance disk and reconnected straight to
    its new endpoint, so no crossing is created or lost.
    """
    if plan.v not in d.vertices:
        raise UnknownVertex(plan.v)
    return _split_into(d, plan.v, [list(plan.group1), list(plan.group2)],
                       [plan.v, plan.new_id], [plan.loc1, plan.loc2])


def split_high_degree(d: Drawing, max_degree) -> Drawing:
    """Split every vertex of degree above ``max_degree`` into chunks of
    consecutive edges in rotation order, each of size at most the bound."""
    bound = Fraction(max_degree)
    if bound < 1:
        raise ValueError("degree bound must be at least 1")
    chunk = math.floor(bound)
    out = d
    taken: set = set()
    for v in list(d.vertices):
        deg = d.degree(v)
        if deg <= bound:
            continue
        order = rotation(out, v)
        groups = [order[i:i + chunk] for i in range(0, deg, chunk)]
        ids = [v] + [_fresh_id(out, v, taken) for _ in groups[1:]]
        out = _split_into(out, v, groups, ids)
    return out


# -- lens rerouting -----------------------------------------------------------------------

def _part_crossings(d: Drawing, eid: str, span: tuple[Position, Position], partner: str) -> int:
    lo, hi = sorted(span)
    return sum(1 for c in edge_crossings(d, eid)
               if c.other(eid) != partner and lo < c.position_on(eid) < hi)


def _reverse_pos(curve, pos: Position) -> Position:
    s, t = pos
    return len(curve) - 2 - s, 1 - t


def _walk(curve_f: np.ndarray, pos: tuple[int, float], dist: float, forward: bool):
    """Float position ``dist`` further along (or back along) a polyline, or None."""
    s, t = pos
    while True:
        seg_len = float(np.hypot(*(curve_f[s + 1] - curve_f[s])))
        room = (1 - t) * seg_len if forward else t * seg_len
        if dist < room:
            return s, t + dist / seg_len if forward else t - dist / seg_len
        dist -= room
        s = s + 1 if forward else s - 1
        if s < 0 or s > len(curve_f) - 2:
            return None
        t = 0.0 if forward else 1.0


def _exact_pos(pos, grid=2 ** 40) -> Position:
    s, t = pos
    return s, Fraction(round(t * grid), grid)


def _offset_points(kf: np.ndarray, side: float, delta: float) -> list[np.ndarray]:
    """Offsets of the interior corners of polyline ``kf`` (mitered, bevelled when sharp)."""
    out = []
    for i in range(1, len(kf) - 1):
        din, dout = _unit(kf[i] - kf[i - 1]), _unit(kf[i + 1] - kf[i])
        nin, nout = side * _left(din), side * _left(dout)
        denom = 1.0 + float(np.dot(nin, nout))
        turn = din[0] * dout[1] - din[1] * dout[0]
        outer = turn * side < 0
        if outer and denom < 0.5:
            out.append(kf[i] + delta * nin)
            out.append(kf[i] + delta * nout)
        else:
            out.append(kf[i] + delta * (nin + nout) / max(denom, 1e-9))
    return out


def _corner(apex: np.ndarray, along_keeper: np.ndarray, along_mover: np.ndarray, delta: float):
    """Offset point in the sector between two rays from ``apex`` and the
    distance of its foot on the mover ray."""
    a, b = _unit(along_keeper), _unit(along_mover)
    cos_t = float(np.clip(np.dot(a, b), -1.0, 1.0))
    half = math.acos(cos_t) / 2
    if half < 1e-9:
        return None
    bis = _unit(a + b) if cos_t > -1 + 1e-12 else _left(a)
    return apex + bis * delta / math.sin(half), delta / math.tan(half)


def _endpoint_anchor(kind: LensKind, at_start: bool) -> bool:
    if kind is LensKind.FULL_PARALLEL_PAIR:
        return True
    if kind is LensKind.ENDPOINT_TO_CROSSING:
        return at_start
    return False


def _rerouted_curve(d: Drawing, lens: Lens, keeper: str, delta: float):
    """New curve for the mover edge, or None if the geometry does not fit."""
    mover = lens.e2 if keeper == lens.e1 else lens.e1
    k_span = lens.span1 if keeper == lens.e1 else lens.span2
    m_span = lens.span2 if keeper == lens.e1 else lens.span1
    kcurve = subcurve(d.edge(keeper).curve, *k_span)
    kf = np.array([_f(p) for p in kcurve])

    # Side of the keeper (relative to its span direction) holding the lens interior.
    area = signed_area2(lens.boundary)
    inside = 1.0 if (area > 0) == (keeper == lens.e1) else -1.0
    side = inside if lens.kind is LensKind.FULL_PARALLEL_PAIR else -inside

    medge = d.edge(mover)
    flip = m_span[0] > m_span[1]
    mcurve = list(reversed(medge.curve)) if flip else list(medge.curve)
    pa, pb = m_span
    if flip:
        pa, pb = _reverse_pos(medge.curve, pa), _reverse_pos(medge.curve, pb)
    mf = np.array([_f(p) for p in mcurve])
    grid = _grid_for(delta)

    start_end = _endpoint_anchor(lens.kind, True)
    end_end = _endpoint_anchor(lens.kind, False)
    new = []
    if start_end:
        new.append(kcurve[0])
    else:
        seg = pa[0]
        res = _corner(kf[0], kf[1] - kf[0], mf[seg] - mf[seg + 1], delta)
        if res is None:
            return None
        o_a, back = res
        wpos = _walk(mf, (pa[0], float(pa[1])), back, forward=False)
        if wpos is None:
            return None
        a_pos = _exact_pos(wpos)
        if a_pos >= pa:
            return None
        head = subcurve(mcurve, (0, Fraction(0)), a_pos)
        new.extend(head)
        new.append(_snap_point(o_a, grid))
    mids = _offset_points(kf, side, delta)
    if start_end:
        first = (kf[0] + kf[1]) / 2 + side * _left(_unit(kf[1] - kf[0])) * delta
        mids.insert(0, first)
    if end_end:
        last = (kf[-2] + kf[-1]) / 2 + side * _left(_unit(kf[-1] - kf[-2])) * delta
        mids.append(last)
    new.extend(_snap_point(q, grid) for q in mids)
    if end_end:
        new.append(kcurve[-1])
    else:
        seg = pb[0]
        res = _corner(kf[-1], kf[-2] - kf[-1], mf[seg + 1] - mf[seg], delta)
        if res is None:
            return None
        o_b, ahead = res
        wpos = _walk(mf, (pb[0], float(pb[1])), ahead, forward=True)
        if wpos is None:
            return None
        b_pos = _exact_pos(wpos)
        if b_pos <= pb:
            return None
        new.append(_snap_point(o_b, grid))
        new.extend(subcurve(mcurve, b_pos, (len(mcurve) - 2, Fraction(1))))
    if new[0] != mcurve[0]:
        return None
    dedup = [new[0]]
    for q in new[1:]:
        if q != dedup[-1]:
            dedup.append(q)
    if flip:
        dedup.reverse()
    return Edge(mover, medge.u, medge.v, tuple(dedup))


def _initial_offset(d: Drawing, lens: Lens, keeper: str) -> float:
    """A third of the float clearance between the keeper's lens part and other features."""
    k_span = lens.span1 if keeper == lens.e1 else lens.span2
    kcurve = subcurve(d.edge(keeper).curve, *k_span)
    kf = np.array([_f(p) for p in kcurve])
    best = min(float(np.hypot(*(kf[i + 1] - kf[i]))) for i in range(len(kf) - 1))
    lo, hi = sorted(k_span)
    events = sorted(c.position_on(keeper) for c in edge_crossings(d, keeper) if lo < c.position_on(keeper) < hi)
    pts = [kf[0]] + [_f(point_at(d.edge(keeper).curve, p)) for p in events] + [kf[-1]]
    if k_span[0] > k_span[1]:
        pts = [kf[0]] + [_f(point_at(d.edge(keeper).curve, p)) for p in reversed(events)] + [kf[-1]]
    for a, b in zip(pts, pts[1:]):
        gap = float(np.hypot(*(b - a)))
        if gap > 0:
            best = min(best, gap)
    m_span = lens.span2 if keeper == lens.e1 else lens.span1
    mover = lens.e2 if keeper == lens.e1 else lens.e1
    near = [_f(q) for q in subcurve(d.edge(mover).curve, *m_span)]
    for qf in [*near, *(_f(q) for q in d.vertices.values())]:
        for i in range(len(kf) - 1):
            dist = _point_segment_distance(qf, kf[i], kf[i + 1])
            if dist > 0:
                best = min(best, dist)
    return best / 3


def _try_reroute(d: Drawing, lens: Lens, strict: bool) -> Drawing | None:
    c1 = _part_crossings(d, lens.e1, lens.span1, lens.e2)
    c2 = _part_crossings(d, lens.e2, lens.span2, lens.e1)
    keeper = lens.e1 if c1 <= c2 else lens.e2
    before = crossing_number(d)
    pairs = crossing_pairs(d)
    delta = _initial_offset(d, lens, keeper)
    for _ in range(SHRINK_ATTEMPTS):
        try:
            edge = _rerouted_curve(d, lens, keeper, delta)
            out = d.replace_edge(edge) if edge is not None else None
        except InvariantViolation:
            out = None
        if out is not None and validate_general_position(out).ok:
            after = crossing_number(out)
            must_drop = strict or lens.kind is not LensKind.FULL_PARALLEL_PAIR
            if (after < before or (not must_drop and after == before)) \
                    and crossing_pairs(out) <= pairs:
                return out
        delta /= 2
    return None


def reroute_empty_lens_step(d: Drawing, kinds: Iterable[LensKind] = ALL_LENS_KINDS,
                            strict: bool = False) -> Drawing | None:
    """Reroute one inclusion-minimal empty lens; None when no lens can be rerouted.

    The edge with more crossings along the lens (the mover) is redrawn as an
    offset copy of the other edge's part.  For lenses ending at a crossing
    the copy runs on the far side of the keeper, which removes the crossings
    at the lens ends.  For a lens formed by two whole parallel edges the copy
    runs inside the lens, so the two edges are pulled together.  A crossing
    lens step always lowers the crossing number; a parallel-pair step may
    leave it unchanged unless ``strict`` is set.  No new pair of edges ever
    starts crossing.
    """
    _require_valid(d)
    for lens in empty_lenses(d, kinds):
        out = _try_reroute(d, lens, strict)
        if out is not None:
            return out
    return None


def reroute_to_fixpoint(d: Drawing, kinds: Iterable[LensKind] = ALL_LENS_KINDS) -> Drawing:
    """Repeat strictly improving reroutes until none applies."""
    kinds = frozenset(kinds)
    bundles = sum(len(b) * (len(b) - 1) // 2 for b in d.bundles.values())
    limit = crossing_number(d) + bundles
    current = d
    for _ in range(limit + 1):
        nxt = reroute_empty_lens_step(current, kinds, strict=True)
        if nxt is None:
            return current
        current = nxt
    raise IterationLimitExceeded(f"no fixpoint after {limit} reroutes")


# -- planarization ------------------------------------------------------------------------

def planarize(d: Drawing) -> Drawing:
    """Put a new vertex on every crossing and split the edges there.

    Crossing k of edges e and f becomes vertex ``x<k>:<e>/<f>`` (with extra x's
    prepended if an id already starts with the prefix); the pieces of edge ``e`` are ``e.0``, ``e.1``, ... in curve order.
    """
    an = _require_valid(d)
    prefix = "x"
    while any(v.startswith(prefix) for v in d.vertices):
        prefix += "x"
    vertices = dict(d.vertices)
    cut_points: dict[str, list[tuple[Position, str]]] = {eid: [] for eid in d.edges}
    for k, c in enumerate(an.crossings):
        vid = f"{prefix}{k}:{c.e1}/{c.e2}"
        vertices[vid] = c.point
        cut_points[c.e1].append((c.pos1, vid))
        cut_points[c.e2].append((c.pos2, vid))
    edges = []
    for e in d.edges.values():
        cuts = sorted(cut_points[e.id])
        if not cuts:
            edges.append(e)
            continue
        stops = [((0, Fraction(0)), e.u), *cuts, ((len(e.curve) - 2, Fraction(1)), e.v)]
        for k, ((pa, va), (pb, vb)) in enumerate(zip(stops, stops[1:])):
            edges.append(Edge(f"{e.id}.{k}", va, vb, tuple(subcurve(e.curve, pa, pb))))
    return Drawing(vertices, edges)
