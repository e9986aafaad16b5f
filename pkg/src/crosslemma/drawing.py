"""Topological multigraph drawings with polyline edges.

A :class:`Drawing` is immutable.  The expensive part, the pairwise segment
analysis that yields crossings and general-position findings, is computed
once on first use and cached on the instance.
"""
from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import (InvalidDrawing, InvariantViolation, NotParallel, NotSimple, UnknownEdge,
                     UnknownVertex)
from .geometry import (
    IntersectionKind,
    Location,
    Point,
    _cross_parts,
    float_bbox,
    lerp,
    on_segment,
    point_in_closed_curve,
    segment_intersection,
)

# A position along a curve: (segment index, parameter in [0, 1]).
Position = tuple[int, Fraction]


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    curve: tuple[Point, ...]

    @property
    def endpoints(self) -> frozenset:
        return frozenset((self.u, self.v))

    @property
    def start(self) -> Position:
        return (0, Fraction(0))

    @property
    def end(self) -> Position:
        return (len(self.curve) - 2, Fraction(1))

    def segments(self):
        return zip(self.curve[:-1], self.curve[1:])

    def other(self, w: str) -> str:
        return self.v if w == self.u else self.u

    def reversed(self) -> "Edge":
        return Edge(self.id, self.v, self.u, tuple(reversed(self.curve)))


def check_polyline(curve: Sequence[Point]) -> None:
    """Raise InvariantViolation unless ``curve`` is a usable polyline."""
    if len(curve) < 2:
        raise InvariantViolation("polyline needs at least two points")
    for a, b in zip(curve[:-1], curve[1:]):
        if a == b:
            raise InvariantViolation(f"repeated consecutive point {a}")
    for a, b, c in zip(curve[:-2], curve[1:-1], curve[2:]):
        if _cross_parts(a, b, c)[0] == 0 and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0:
            raise InvariantViolation(f"polyline doubles back at {b}")


@dataclass(frozen=True)
class Finding:
    """One general-position violation."""
    kind: str
    ids: tuple[str, ...]
    location: Point | None = None

    def __str__(self):
        where = f" at ({self.location.x}, {self.location.y})" if self.location else ""
        return f"{self.kind} [{', '.join(self.ids)}]{where}"


VERTEX_ON_EDGE = "VertexOnEdgeInterior"
NON_PROPER_TOUCH = "NonProperTouch"
OVERLAPPING_EDGES = "OverlappingEdges"
TRIPLE_CROSSING = "TripleCrossing"
SELF_INTERSECTION = "SelfIntersection"


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.findings

    def __iter__(self):
        return iter(self.findings)

    def __len__(self):
        return len(self.findings)

    def kinds(self) -> set[str]:
        return {f.kind for f in self.findings}


@dataclass(frozen=True)
class Crossing:
    e1: str
    e2: str
    point: Point
    seg1: int
    t1: Fraction
    seg2: int
    t2: Fraction

    @property
    def pos1(self) -> Position:
        return (self.seg1, self.t1)

    @property
    def pos2(self) -> Position:
        return (self.seg2, self.t2)

    def position_on(self, eid: str) -> Position:
        if eid == self.e1:
            return self.pos1
        if eid == self.e2:
            return self.pos2
        raise UnknownEdge(eid)

    def other(self, eid: str) -> str:
        return self.e2 if eid == self.e1 else self.e1


class LensKind(enum.Enum):
    FULL_PARALLEL_PAIR = "FullParallelPair"
    BETWEEN_CROSSINGS = "BetweenCrossings"
    ENDPOINT_TO_CROSSING = "EndpointToCrossing"


ALL_LENS_KINDS = frozenset(LensKind)


@dataclass(frozen=True)
class Lens:
    """A closed curve made of one part of ``e1`` and one part of ``e2``.

    Both parts run from ``start`` to ``end``; ``span1``/``span2`` give the
    positions of those anchors along each edge's stored curve.
    """
    e1: str
    e2: str
    kind: LensKind
    boundary: tuple[Point, ...]
    interior_vertices: tuple[str, ...]
    exterior_vertices: tuple[str, ...]
    span1: tuple[Position, Position]
    span2: tuple[Position, Position]
    boundary_vertices: tuple[str, ...] = ()
    bbox: tuple[float, float, float, float] = field(default=None, compare=False, repr=False)

    @property
    def is_empty(self) -> bool:
        return not self.interior_vertices

    def contains_point(self, p: Point) -> Location:
        return locate(p, self.boundary, self.bbox)


def locate(p: Point, loop: Sequence[Point], bbox=None) -> Location:
    """point_in_closed_curve with a float bounding-box shortcut."""
    if bbox is not None:
        x, y = float(p.x), float(p.y)
        if x < bbox[0] or y < bbox[1] or x > bbox[2] or y > bbox[3]:
            return Location.EXTERIOR
    return point_in_closed_curve(p, loop, check=False)


def point_at(curve: Sequence[Point], pos: Position) -> Point:
    s, t = pos
    if t == 0:
        return curve[s]
    if t == 1:
        return curve[s + 1]
    return lerp(curve[s], curve[s + 1], t)


def subcurve(curve: Sequence[Point], pa: Position, pb: Position) -> list[Point]:
    """Points of ``curve`` from position ``pa`` to ``pb`` (either direction)."""
    if pa > pb:
        return list(reversed(subcurve(curve, pb, pa)))
    pts = [point_at(curve, pa)]
    pts.extend(curve[pa[0] + 1: pb[0] + 1])
    pts.append(point_at(curve, pb))
    out = [pts[0]]
    for q in pts[1:]:
        if q != out[-1]:
            out.append(q)
    return out


def _candidate_pairs(boxes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays (i < j) of segments whose padded bounding boxes overlap."""
    if len(boxes) < 2:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    order = np.argsort(boxes[:, 0], kind="stable")
    sb = boxes[order]
    his = np.searchsorted(sb[:, 0], sb[:, 2], side="right")
    left, right = [], []
    for k in np.nonzero(his > np.arange(len(sb)) + 1)[0]:
        hi = his[k]
        window = sb[k + 1:hi]
        hit = np.nonzero((window[:, 1] <= sb[k, 3]) & (window[:, 3] >= sb[k, 1]))[0]
        if len(hit):
            left.append(np.full(len(hit), order[k]))
            right.append(order[k + 1 + hit])
    if not left:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    i, j = np.concatenate(left), np.concatenate(right)
    return np.minimum(i, j), np.maximum(i, j)


def _surely_apart(fa: np.ndarray, fb: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Mask of segment pairs that float arithmetic proves disjoint.

    A pair is disjoint when both ends of one segment lie strictly on the same
    side of the other's line.  The error bound is far above the rounding
    error of these determinants, so a True entry never hides a contact.
    """
    p1, p2, p3, p4 = fa[i], fb[i], fa[j], fb[j]

    def side(o, a, b):
        ax, ay = a[:, 0] - o[:, 0], a[:, 1] - o[:, 1]
        bx, by = b[:, 0] - o[:, 0], b[:, 1] - o[:, 1]
        val = ax * by - ay * bx
        err = 1e-12 * (np.abs(ax * by) + np.abs(ay * bx)
                       + (np.abs(ax) + np.abs(ay) + np.abs(bx) + np.abs(by))
                       * (np.abs(o).max(axis=1) + 1.0))
        return np.where(val > err, 1, np.where(val < -err, -1, 0))

    d1, d2 = side(p3, p4, p1), side(p3, p4, p2)
    d3, d4 = side(p1, p2, p3), side(p1, p2, p4)
    return ((d1 * d2) > 0) | ((d3 * d4) > 0)


class _Analysis:
    def __init__(self, drawing: "Drawing"):
        edges = list(drawing.edges.values())
        eindex = {e.id: k for k, e in enumerate(edges)}
        loc_to_vertex = {p: vid for vid, p in drawing.vertices.items()}
        findings: list[Finding] = []

        segs = []
        for ei, e in enumerate(edges):
            for si, (a, b) in enumerate(e.segments()):
                segs.append((ei, si, a, b))
        boxes = np.array([float_bbox((a, b)) for _, _, a, b in segs]).reshape(-1, 4)

        # (a) vertices must not lie in the relative interior of any curve.
        seen = set()
        for vid, p in drawing.vertices.items():
            if not len(segs):
                break
            x, y = float(p.x), float(p.y)
            hits = np.nonzero((boxes[:, 0] <= x) & (boxes[:, 2] >= x)
                              & (boxes[:, 1] <= y) & (boxes[:, 3] >= y))[0]
            for k in hits:
                ei, si, a, b = segs[k]
                e = edges[ei]
                if not on_segment(p, a, b):
                    continue
                if (p == e.curve[0] and vid == e.u) or (p == e.curve[-1] and vid == e.v):
                    continue
                if (vid, e.id) not in seen:
                    seen.add((vid, e.id))
                    findings.append(Finding(VERTEX_ON_EDGE, (vid, e.id), p))

        crossings: list[Crossing] = []
        ci, cj = _candidate_pairs(boxes)
        if len(ci):
            fa = np.array([[float(a.x), float(a.y)] for _, _, a, _ in segs])
            fb = np.array([[float(b.x), float(b.y)] for _, _, _, b in segs])
            keep = ~_surely_apart(fa, fb, ci, cj)
            ci, cj = ci[keep].tolist(), cj[keep].tolist()
        for i, j in zip(ci, cj):
            ei, si, a, b = segs[i]
            ej, sj, c, d = segs[j]
            if ei == ej:
                if abs(si - sj) == 1:
                    continue
                res = segment_intersection((a, b), (c, d))
                if res.kind is not IntersectionKind.EMPTY:
                    findings.append(Finding(SELF_INTERSECTION, (edges[ei].id,), res.point))
                continue
            res = segment_intersection((a, b), (c, d))
            kind = res.kind
            if kind is IntersectionKind.EMPTY:
                continue
            if kind is IntersectionKind.PROPER:
                if ei < ej:
                    crossings.append(Crossing(edges[ei].id, edges[ej].id, res.point,
                                              si, res.t1, sj, res.t2))
                else:
                    crossings.append(Crossing(edges[ej].id, edges[ei].id, res.point,
                                              sj, res.t2, si, res.t1))
            elif kind is IntersectionKind.OVERLAP:
                findings.append(Finding(OVERLAPPING_EDGES,
                                        tuple(sorted((edges[ei].id, edges[ej].id))), None))
            else:
                w = loc_to_vertex.get(res.point)
                if w is None:
                    findings.append(Finding(NON_PROPER_TOUCH,
                                            tuple(sorted((edges[ei].id, edges[ej].id))),
                                            res.point))
                # A touch at a vertex is either a shared endpoint or is
                # already reported as a vertex on an edge interior.

        at_point = defaultdict(set)
        for c in crossings:
            at_point[c.point].update((c.e1, c.e2))
        for p, eids in at_point.items():
            if len(eids) >= 3:
                findings.append(Finding(TRIPLE_CROSSING, tuple(sorted(eids)), p))

        crossings.sort(key=lambda c: (eindex[c.e1], eindex[c.e2], c.pos1))
        self._index(tuple(crossings), tuple(dict.fromkeys(findings)), eindex)

    def _index(self, crossings, findings, eindex):
        self.crossings = crossings
        self.findings = findings
        self.by_pair: dict[tuple[str, str], list[Crossing]] = defaultdict(list)
        self.by_edge: dict[str, list[Crossing]] = defaultdict(list)
        for c in self.crossings:
            self.by_pair[(c.e1, c.e2)].append(c)
            self.by_edge[c.e1].append(c)
            self.by_edge[c.e2].append(c)
        self.edge_order = eindex

    def restricted(self, sub: "Drawing") -> "_Analysis":
        """Analysis of a sub-drawing (subset of vertices and edges, same
        curves) of a drawing whose analysis found no violations."""
        out = object.__new__(_Analysis)
        keep = sub._edges
        eindex = {eid: k for k, eid in enumerate(keep)}
        out._index(tuple(c for c in self.crossings if c.e1 in keep and c.e2 in keep), (), eindex)
        return out


class Drawing:
    """Vertices at rational points and edges as rational polylines."""

    def __init__(self, vertices: Mapping[str, Point] | Iterable[tuple[str, Point]] = (),
                 edges: Iterable[Edge] = ()):
        vmap = dict(vertices)
        if len(set(vmap.values())) != len(vmap):
            raise InvariantViolation("two vertices share a location")
        emap: dict[str, Edge] = {}
        for e in edges:
            if e.id in emap:
                raise InvariantViolation(f"duplicate edge id {e.id!r}")
            if e.u == e.v:
                raise InvariantViolation(f"edge {e.id!r} is a loop at {e.u!r}")
            for w in (e.u, e.v):
                if w not in vmap:
                    raise InvariantViolation(f"edge {e.id!r} uses unknown vertex {w!r}")
            check_polyline(e.curve)
            if e.curve[0] != vmap[e.u] or e.curve[-1] != vmap[e.v]:
                raise InvariantViolation(f"edge {e.id!r} does not end at its vertices")
            emap[e.id] = e
        self._vertices = vmap
        self._edges = emap

    # -- basic access -------------------------------------------------------

    @property
    def vertices(self) -> Mapping[str, Point]:
        return MappingProxyType(self._vertices)

    @property
    def edges(self) -> Mapping[str, Edge]:
        return MappingProxyType(self._edges)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def e(self) -> int:
        return len(self._edges)

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise UnknownEdge(eid) from None

    def __eq__(self, other):
        if not isinstance(other, Drawing):
            return NotImplemented
        return (list(self._vertices.items()) == list(other._vertices.items())
                and list(self._edges.values()) == list(other._edges.values()))

    __hash__ = None

    def __repr__(self):
        return f"<Drawing n={self.n} e={self.e}>"

    @cached_property
    def incidence(self) -> dict[str, list[str]]:
        inc = {v: [] for v in self._vertices}
        for e in self._edges.values():
            inc[e.u].append(e.id)
            inc[e.v].append(e.id)
        return inc

    @cached_property
    def bundles(self) -> dict[frozenset, list[str]]:
        """Edge ids grouped by endpoint pair."""
        out: dict[frozenset, list[str]] = defaultdict(list)
        for e in self._edges.values():
            out[e.endpoints].append(e.id)
        return dict(out)

    def degree(self, v: str) -> int:
        if v not in self._vertices:
            raise UnknownVertex(v)
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence.values()), default=0)

    # -- derived drawings ---------------------------------------------------

    def _inherit(self, sub: "Drawing") -> "Drawing":
        an = self.__dict__.get("_analysis")
        if an is not None and not an.findings:
            sub.__dict__["_analysis"] = an.restricted(sub)
        return sub

    def without_edges(self, eids: Iterable[str]) -> "Drawing":
        drop = set(eids)
        for eid in drop:
            self.edge(eid)
        return self._inherit(Drawing(self._vertices,
                                     (e for e in self._edges.values() if e.id not in drop)))

    def with_edge(self, edge: Edge) -> "Drawing":
        return Drawing(self._vertices, [*self._edges.values(), edge])

    def replace_edge(self, edge: Edge) -> "Drawing":
        self.edge(edge.id)
        return Drawing(self._vertices, (edge if e.id == edge.id else e for e in self._edges.values()))

    def induced(self, vertex_ids: Iterable[str], drop_edges: Iterable[str] = ()) -> "Drawing":
        """Sub-drawing on ``vertex_ids`` with the edges inside it (minus ``drop_edges``)."""
        keep = set(vertex_ids)
        drop = set(drop_edges)
        return self._inherit(Drawing(((v, p) for v, p in self._vertices.items() if v in keep),
                                     (e for e in self._edges.values()
                                      if e.u in keep and e.v in keep and e.id not in drop)))

    # -- analysis -----------------------------------------------------------

    @cached_property
    def _analysis(self) -> _Analysis:
        return _Analysis(self)


def validate_general_position(d: Drawing) -> ValidationReport:
    return ValidationReport(d._analysis.findings)


def _require_valid(d: Drawing) -> _Analysis:
    an = d._analysis
    if an.findings:
        raise InvalidDrawing("drawing is not in general position", an.findings)
    return an


def crossings(d: Drawing) -> list[Crossing]:
    return list(_require_valid(d).crossings)


def crossing_number(d: Drawing) -> int:
    return len(_require_valid(d).crossings)


def pair_key(d: Drawing, e1: str, e2: str) -> tuple[str, str]:
    order = d._analysis.edge_order
    return (e1, e2) if order[e1] < order[e2] else (e2, e1)


def pair_crossings(d: Drawing, e1: str, e2: str) -> list[Crossing]:
    d.edge(e1), d.edge(e2)
    return list(_require_valid(d).by_pair.get(pair_key(d, e1, e2), ()))


def edge_pair_crossings(d: Drawing, e1: str, e2: str) -> int:
    if e1 == e2:
        raise ValueError("edge_pair_crossings needs two distinct edges")
    return len(pair_crossings(d, e1, e2))


def edge_crossings(d: Drawing, eid: str) -> list[Crossing]:
    d.edge(eid)
    return list(_require_valid(d).by_edge.get(eid, ()))


def crossing_pairs(d: Drawing) -> set[frozenset]:
    return {frozenset((c.e1, c.e2)) for c in crossings(d)}


def multiplicity(d: Drawing, u: str, v: str) -> int:
    for w in (u, v):
        if w not in d.vertices:
            raise UnknownVertex(w)
    if u == v:
        raise ValueError("multiplicity needs two distinct vertices")
    return len(d.bundles.get(frozenset((u, v)), ()))


def max_multiplicity(d: Drawing) -> int:
    return max((len(b) for b in d.bundles.values()), default=0)


def parallel_pairs(d: Drawing) -> Iterator[tuple[str, str]]:
    for bundle in d.bundles.values():
        yield from itertools.combinations(bundle, 2)


# -- lenses ------------------------------------------------------------------

def _build_lens(d: Drawing, e1: Edge, e2: Edge, kind: LensKind,
                span1: tuple[Position, Position], span2: tuple[Position, Position],
                boundary_vertices: tuple[str, ...], stop_on_interior: bool = False) -> Lens | None:
    part1 = subcurve(e1.curve, *span1)
    part2 = subcurve(e2.curve, *span2)
    loop = tuple(part1 + list(reversed(part2))[1:])
    bbox = float_bbox(loop)
    inside, outside = [], []
    for vid, p in d.vertices.items():
        if vid in boundary_vertices:
            continue
        where = locate(p, loop, bbox)
        if where is Location.INTERIOR:
            if stop_on_interior:
                return None
            inside.append(vid)
        elif where is Location.EXTERIOR:
            outside.append(vid)
        else:  # pragma: no cover - excluded by general position
            raise InvalidDrawing(f"vertex {vid} lies on lens boundary")
    return Lens(e1.id, e2.id, kind, loop, tuple(inside), tuple(outside),
                span1, span2, boundary_vertices, bbox)


def lens_of_parallel_pair(d: Drawing, e1: str, e2: str) -> Lens | None:
    """The closed curve formed by two parallel edges.

    Raises NotSimple when the two curves cross each other, so they do not
    bound a simple region.
    """
    a, b = d.edge(e1), d.edge(e2)
    if e1 == e2 or a.endpoints != b.endpoints:
        raise NotParallel(f"{e1} and {e2} are not parallel")
    if pair_crossings(d, e1, e2):
        raise NotSimple(f"{e1} and {e2} cross each other")
    span2 = (b.start, b.end) if b.u == a.u else (b.end, b.start)
    return _build_lens(d, a, b, LensKind.FULL_PARALLEL_PAIR, (a.start, a.end), span2, (a.u, a.v))


def _pair_lenses(d: Drawing, a: Edge, b: Edge, kinds, stop_on_interior: bool) -> list[Lens]:
    out = []
    cs = pair_crossings(d, a.id, b.id)
    if not cs:
        if LensKind.FULL_PARALLEL_PAIR in kinds and a.endpoints == b.endpoints:
            span2 = (b.start, b.end) if b.u == a.u else (b.end, b.start)
            lens = _build_lens(d, a, b, LensKind.FULL_PARALLEL_PAIR, (a.start, a.end),
                               span2, (a.u, a.v), stop_on_interior)
            if lens is not None:
                out.append(lens)
        return out
    along_a = sorted(cs, key=lambda c: c.position_on(a.id))
    rank_b = {id(c): k for k, c in enumerate(sorted(cs, key=lambda c: c.position_on(b.id)))}
    if LensKind.BETWEEN_CROSSINGS in kinds:
        for c1, c2 in zip(along_a, along_a[1:]):
            if abs(rank_b[id(c1)] - rank_b[id(c2)]) != 1:
                continue
            lens = _build_lens(d, a, b, LensKind.BETWEEN_CROSSINGS,
                               (c1.position_on(a.id), c2.position_on(a.id)),
                               (c1.position_on(b.id), c2.position_on(b.id)), (), stop_on_interior)
            if lens is not None:
                out.append(lens)
    if LensKind.ENDPOINT_TO_CROSSING in kinds:
        by_b = sorted(cs, key=lambda c: c.position_on(b.id))
        for w in a.endpoints & b.endpoints:
            first_a = along_a[0] if w == a.u else along_a[-1]
            first_b = by_b[0] if w == b.u else by_b[-1]
            if first_a is not first_b:
                continue
            end_a = a.start if w == a.u else a.end
            end_b = b.start if w == b.u else b.end
            lens = _build_lens(d, a, b, LensKind.ENDPOINT_TO_CROSSING,
                               (end_a, first_a.position_on(a.id)),
                               (end_b, first_a.position_on(b.id)), (w,), stop_on_interior)
            if lens is not None:
                out.append(lens)
    return out


def _lens_candidate_pairs(d: Drawing) -> list[tuple[str, str]]:
    an = _require_valid(d)
    pairs = set(an.by_pair)
    for bundle in d.bundles.values():
        for x, y in itertools.combinations(bundle, 2):
            pairs.add(pair_key(d, x, y))
    return sorted(pairs, key=lambda p: (an.edge_order[p[0]], an.edge_order[p[1]]))


def lenses(d: Drawing, kinds: Iterable[LensKind] = ALL_LENS_KINDS) -> list[Lens]:
    """Every two-edge lens of the drawing, empty or not."""
    kinds = frozenset(kinds)
    out = []
    for x, y in _lens_candidate_pairs(d):
        out.extend(_pair_lenses(d, d.edge(x), d.edge(y), kinds, False))
    return out


def lens_inside(inner: Lens, outer: Lens) -> bool:
    """Whether the region of ``inner`` lies within the region of ``outer``."""
    if inner.boundary == outer.boundary:
        return False
    samples = list(inner.boundary[:-1])
    samples += [lerp(p, q, Fraction(1, 2)) for p, q in zip(inner.boundary[:-1], inner.boundary[1:])]
    strictly = False
    for p in samples:
        where = outer.contains_point(p)
        if where is Location.EXTERIOR:
            return False
        strictly = strictly or where is Location.INTERIOR
    return strictly


def empty_lenses(d: Drawing, kinds: Iterable[LensKind] = ALL_LENS_KINDS,
                 minimal: bool = True) -> list[Lens]:
    """Lenses without a vertex inside; by default only inclusion-minimal ones."""
    kinds = frozenset(kinds)
    found = []
    for x, y in _lens_candidate_pairs(d):
        found.extend(_pair_lenses(d, d.edge(x), d.edge(y), kinds, True))
    if not minimal:
        return found
    return [L for L in found if not any(M is not L and lens_inside(M, L) for M in found)]
