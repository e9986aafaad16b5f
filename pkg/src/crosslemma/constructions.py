"""Generators for extremal families, oracle families and test corpora."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .drawing import Drawing, Edge, _require_valid, validate_general_position
from .errors import GenerationFailed, ResolutionTooCoarse
from .geometry import Point, point, snap

GRID = 2 ** 30
MAX_RESOLUTION = 4096
END_REFINEMENT = 8


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    n: int
    seed: int = 0
    resolution: int = 16
    m: int | None = None
    r: int | None = None
    e: int | None = None

    def __post_init__(self):
        if self.resolution < 8:
            raise ValueError("resolution must be at least 8")


def parabola_points(n: int) -> list[Point]:
    """``n`` points on y = x^2 with no four on a common circle.

    Four points (t_i, t_i^2) are concyclic exactly when their parameters sum
    to zero; the offset of h/7 rules that out for every 4-subset.
    """
    if n == 1:
        return [point(0, 0)]
    h = Fraction(2, n - 1)
    ts = [-1 + h * i + h / 7 for i in range(n)]
    return [Point(t, t * t) for t in ts]


def concyclic(a: Point, b: Point, c: Point, d: Point) -> bool:
    rows = [[p.x * p.x + p.y * p.y, p.x, p.y, Fraction(1)] for p in (a, b, c, d)]
    return _det(rows) == 0


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            for c in range(col, size):
                m[r][c] -= f * m[col][c]
    return det


# -- separated arc family --------------------------------------------------------

class _Arc:
    """Float model of a circular arc (or straight segment) from u to v."""

    def __init__(self, u, v, phi):
        self.u = np.asarray(u, float)
        self.v = np.asarray(v, float)
        self.phi = phi
        chord = self.v - self.u
        self.length = float(np.hypot(*chord))
        d = chord / self.length
        nrm = np.array([-d[1], d[0]])
        if phi == 0:
            self.center = None
            return
        mid = (self.u + self.v) / 2
        self.radius = self.length / (2 * abs(math.sin(phi)))
        self.center = mid - nrm * (self.length / 2) / math.tan(phi)
        self.theta_u = math.atan2(*(self.u - self.center)[::-1])
        self.sweep = -2 * phi

    def sample(self, count: int) -> list[np.ndarray]:
        """Points along the arc: ``count`` evenly spaced plus a geometric
        refinement towards both ends, where arcs from other pencils meet it
        at small angles."""
        if self.center is None:
            return [self.u, self.v]
        step = 1.0 / (count - 1)
        tail = [step * 2.0 ** -j for j in range(END_REFINEMENT, 0, -1)]
        params = [0.0, *tail, *(k * step for k in range(1, count - 1)),
                  *(1.0 - s for s in reversed(tail)), 1.0]
        out = []
        for s in params:
            th = self.theta_u + self.sweep * s
            out.append(self.center + self.radius * np.array([math.cos(th), math.sin(th)]))
        return out

    def contains_angle(self, p) -> bool:
        th = math.atan2(p[1] - self.center[1], p[0] - self.center[0])
        rel = (th - self.theta_u) if self.sweep > 0 else (self.theta_u - th)
        rel %= 2 * math.pi
        return 1e-12 < rel < abs(self.sweep) - 1e-12

    def contains_on_segment(self, p) -> bool:
        chord = self.v - self.u
        t = float(np.dot(p - self.u, chord) / np.dot(chord, chord))
        return 1e-12 < t < 1 - 1e-12

    def contains(self, p) -> bool:
        return self.contains_on_segment(p) if self.center is None else self.contains_angle(p)


def _circle_points(a: _Arc, b: _Arc):
    """Candidate intersection points of the full supporting circles/lines."""
    if a.center is None and b.center is None:
        p, r = a.u, a.v - a.u
        q, s = b.u, b.v - b.u
        den = r[0] * s[1] - r[1] * s[0]
        if abs(den) < 1e-15:
            return []
        t = ((q - p)[0] * s[1] - (q - p)[1] * s[0]) / den
        return [p + t * r]
    if a.center is None:
        a, b = b, a
    if b.center is None:
        p, dvec = b.u, b.v - b.u
        f = p - a.center
        qa = float(np.dot(dvec, dvec))
        qb = 2 * float(np.dot(f, dvec))
        qc = float(np.dot(f, f)) - a.radius ** 2
        disc = qb * qb - 4 * qa * qc
        if disc < 0:
            return []
        root = math.sqrt(disc)
        return [p + dvec * ((-qb - root) / (2 * qa)), p + dvec * ((-qb + root) / (2 * qa))]
    dvec = b.center - a.center
    dist = float(np.hypot(*dvec))
    if dist == 0 or dist > a.radius + b.radius or dist < abs(a.radius - b.radius):
        return []
    x = (dist ** 2 + a.radius ** 2 - b.radius ** 2) / (2 * dist)
    h = math.sqrt(max(a.radius ** 2 - x * x, 0.0))
    base = a.center + dvec * (x / dist)
    perp = np.array([-dvec[1], dvec[0]]) / dist
    return [base + h * perp, base - h * perp]


def _ideal_crossings(a: _Arc, b: _Arc, vertex_xy: np.ndarray) -> int:
    count = 0
    for p in _circle_points(a, b):
        if np.min(np.hypot(*(vertex_xy - p).T)) < 1e-9:
            continue
        if a.contains(p) and b.contains(p):
            count += 1
    return count


def _tangent_angle(u, v, w) -> float:
    """Angle at u between chord uv and the arc of circle(u, w, v) through w."""
    a, b = u - w, v - w
    inscribed = math.atan2(abs(a[0] * b[1] - a[1] * b[0]), float(np.dot(a, b)))
    side = (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])
    return math.copysign(math.pi - inscribed, side)


def _pencil_gaps(u, v, others) -> list[tuple[float, float]]:
    """The n-2 usable tangent-angle intervals for arcs from u to v.

    Arcs in distinct gaps enclose at least one vertex; dropping one extreme
    gap keeps a vertex outside every pair.
    """
    phis = sorted(_tangent_angle(u, v, w) for w in others)
    gaps = [(-math.pi, phis[0])] + list(zip(phis, phis[1:])) + [(phis[-1], math.pi)]
    first, last = gaps[0], gaps[-1]
    if first[0] < 0 < first[1]:
        return gaps[:-1]
    if last[0] < 0 < last[1]:
        return gaps[1:]
    if first[1] - first[0] >= last[1] - last[0]:
        return gaps[:-1]
    return gaps[1:]


def _choose_angles(xy, slots, rounds: int = 3, samples: int = 24) -> list[float]:
    """Pick one tangent angle per slot, spreading directions at shared vertices.

    ``slots`` holds (i, j, lo, hi).  Start at gap midpoints, then sweep the
    slots a few times, moving each angle inside the central part of its gap
    to maximise the smallest angle to any other curve at either endpoint.
    """
    limit = math.pi - 0.35
    tau = 2 * math.pi
    ends = np.array([(i, j) for i, j, _, _ in slots])
    chord = xy[ends[:, 1]] - xy[ends[:, 0]]
    base_u = np.arctan2(chord[:, 1], chord[:, 0])
    base_v = base_u + math.pi
    cands, phis = [], []
    for i, j, lo, hi in slots:
        a, b = max(lo, -limit), min(hi, limit)
        if a >= b:
            a, b = lo, hi
        w = b - a
        opts = np.linspace(a + 0.15 * w, b - 0.15 * w, samples)
        if lo < 0 < hi:
            opts = np.append(opts, 0.0)
            phis.append(0.0)
        else:
            phis.append((a + b) / 2)
        cands.append(opts)
    phis = np.array(phis)
    # The arc leaves u at base_u + phi and leaves v at base_v - phi.
    sign = {}
    at_vertex: dict[int, list[int]] = {}
    for k, (i, j) in enumerate(ends.tolist()):
        at_vertex.setdefault(i, []).append(k)
        at_vertex.setdefault(j, []).append(k)
        sign[(k, i)], sign[(k, j)] = 1.0, -1.0
    members = {w: np.array(ks) for w, ks in at_vertex.items()}
    flips = {w: np.array([sign[(k, w)] for k in ks]) for w, ks in at_vertex.items()}

    def directions(w):
        ks = members[w]
        base = np.where(flips[w] > 0, base_u[ks], base_v[ks])
        return base + flips[w] * phis[ks]

    for _ in range(rounds):
        for k, (i, j) in enumerate(ends.tolist()):
            score = np.full(len(cands[k]), np.inf)
            for w, base in ((i, base_u[k]), (j, base_v[k])):
                mine = base + sign[(k, w)] * cands[k]
                others = directions(w)[members[w] != k]
                diff = np.abs((mine[:, None] - others[None, :]) % tau)
                gap = np.minimum(diff, tau - diff).min(axis=1)
                score = np.minimum(score, gap)
            phis[k] = cands[k][int(np.argmax(score))]
    return phis.tolist()


def _near_tangency(a: _Arc, b: _Arc) -> float:
    """How far two supporting circles (or a circle and a line) are from touching."""
    if a.center is None and b.center is None:
        return math.inf
    if a.center is None:
        a, b = b, a
    if b.center is None:
        direction = (b.v - b.u) / b.length
        off = a.center - b.u
        dist = abs(direction[0] * off[1] - direction[1] * off[0])
        return abs(dist - a.radius)
    d = float(np.hypot(*(a.center - b.center)))
    return min(abs(d - a.radius - b.radius), abs(d - abs(a.radius - b.radius)))


def _sample_counts(arcs, base: int) -> dict[str, int]:
    """Per-arc sample counts keeping chord sagitta below a quarter of the
    closest near-tangency with any arc it may meet.

    Arcs sharing an endpoint are skipped: their circles meet there, and
    they are handled by the refinement towards the ends."""
    tol = {eid: math.inf for eid, *_ in arcs}
    boxes = {}
    for eid, _, _, arc in arcs:
        pts = np.array(arc.sample(64))
        boxes[eid] = (pts.min(axis=0), pts.max(axis=0))
    for (x, i, j, a), (y, k, l, b) in itertools.combinations(arcs, 2):
        if {i, j} & {k, l}:
            # Circles through a shared vertex come close only near it, where
            # the sampling is already refined.
            continue
        (alo, ahi), (blo, bhi) = boxes[x], boxes[y]
        if np.any(alo > bhi + 1e-6) or np.any(blo > ahi + 1e-6):
            continue
        t = _near_tangency(a, b)
        tol[x] = min(tol[x], t)
        tol[y] = min(tol[y], t)
    counts = {}
    for eid, _, _, arc in arcs:
        if arc.center is None:
            counts[eid] = 2
            continue
        sag = max(tol[eid] / 4, 1e-9)
        step = math.sqrt(8 * sag / arc.radius)
        need = math.ceil(abs(arc.sweep) / step) + 1
        counts[eid] = int(min(MAX_RESOLUTION, max(base, need)))
    return counts


def _arc_layout(n: int):
    pts = parabola_points(n)
    for quad in itertools.combinations(pts, 4):
        if concyclic(*quad):  # pragma: no cover - excluded by the parameter choice
            raise GenerationFailed("four concyclic points")
    ids = [f"v{i}" for i in range(n)]
    xy = np.array([[float(p.x), float(p.y)] for p in pts])
    slots = []
    for i, j in itertools.combinations(range(n), 2):
        others = [xy[k] for k in range(n) if k not in (i, j)]
        slots.extend((i, j, lo, hi) for lo, hi in _pencil_gaps(xy[i], xy[j], others))
    arcs = []
    counter: dict[tuple[int, int], int] = {}
    for (i, j, _, _), phi in zip(slots, _choose_angles(xy, slots)):
        k = counter.get((i, j), 0)
        counter[(i, j)] = k + 1
        arcs.append((f"{ids[i]}~{ids[j]}.{k}", i, j, _Arc(xy[i], xy[j], phi)))
    return ids, pts, xy, arcs


def _discretize(ids, pts, arcs, counts: dict[str, int]) -> Drawing:
    vertices = dict(zip(ids, pts))
    edges = []
    for eid, i, j, arc in arcs:
        samples = arc.sample(counts[eid])
        inner = [Point(snap(p[0], GRID), snap(p[1], GRID)) for p in samples[1:-1]]
        curve = [pts[i]]
        for q in inner:
            if q != curve[-1]:
                curve.append(q)
        curve.append(pts[j])
        edges.append(Edge(eid, ids[i], ids[j], tuple(curve)))
    return Drawing(vertices, edges)


def _arc_family_defects(d: Drawing, arcs, xy) -> list[tuple[str, ...]]:
    """Edges whose sampled crossings disagree with the exact circle picture."""
    report = validate_general_position(d)
    if not report.ok:
        return [f.ids for f in report.findings]
    an = _require_valid(d)
    model = {eid: arc for eid, _, _, arc in arcs}
    order = [eid for eid, *_ in arcs]
    defects = []
    for x, y in itertools.combinations(order, 2):
        got = len(an.by_pair.get((x, y), ()))
        if got > 2 or got != _ideal_crossings(model[x], model[y], xy):
            defects.append((x, y))
    return defects


def separated_arc_construction(n: int, resolution: int = 16) -> Drawing:
    """Separated multigraph with C(n,2)(n-2) edges drawn as circular arcs.

    Vertices sit on a parabola (no four concyclic).  For every vertex pair
    the arcs of the pencil of circles through both are ordered by their
    tangent angle; one arc goes into each gap between consecutive other
    vertices plus one extreme gap, so any two parallel arcs enclose a vertex
    and leave one outside.  Arcs are sampled into rational polylines, finer
    where circles nearly touch, and the result is checked against the exact
    circle arrangement.  Arcs that disagree are resampled more finely.
    ``resolution`` is the minimum number of samples per arc.
    """
    if n < 3:
        raise ValueError("the arc construction needs n >= 3")
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    ids, pts, xy, arcs = _arc_layout(n)
    counts = _sample_counts(arcs, resolution)
    while True:
        d = _discretize(ids, pts, arcs, counts)
        defects = _arc_family_defects(d, arcs, xy)
        if not defects:
            return d
        bad = {eid for pair in defects for eid in pair if eid in counts}
        if all(counts[eid] >= MAX_RESOLUTION or counts[eid] == 2 for eid in bad):
            shown = "; ".join("/".join(pair) for pair in defects[:3])
            raise ResolutionTooCoarse(f"sampling cannot resolve {shown}")
        for eid in bad:
            if counts[eid] > 2:
                counts[eid] = min(MAX_RESOLUTION, counts[eid] * 2)


# -- straight-line families --------------------------------------------------------

def _straight(eid: str, u: str, v: str, vertices) -> Edge:
    return Edge(eid, u, v, (vertices[u], vertices[v]))


def convex_points(n: int) -> list[Point]:
    """Points in convex position with no three diagonals through one point."""
    ts = (Fraction(i, n) + Fraction(i * i, 13 * n * n) for i in range(n))
    return [Point(t, t * t) for t in ts]


def convex_complete(n: int) -> Drawing:
    if n < 3:
        raise ValueError("convex_complete needs n >= 3")
    vertices = {f"v{i}": p for i, p in enumerate(convex_points(n))}
    edges = [_straight(f"v{i}v{j}", f"v{i}", f"v{j}", vertices)
             for i, j in itertools.combinations(range(n), 2)]
    return Drawing(vertices, edges)


def even_cycle(r: int) -> Drawing:
    """C_{2r+2} drawn as a convex polygon; its girth exceeds 2r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    k = 2 * r + 2
    vertices = {f"v{i}": p for i, p in enumerate(convex_points(k))}
    edges = [_straight(f"c{i}", f"v{i}", f"v{(i + 1) % k}", vertices) for i in range(k)]
    return Drawing(vertices, edges)


def path_drawing(n: int) -> Drawing:
    vertices = {f"v{i}": point(i, (i * i) % 3) for i in range(n)}
    edges = [_straight(f"p{i}", f"v{i}", f"v{i + 1}", vertices) for i in range(n - 1)]
    return Drawing(vertices, edges)


def two_cliques(k: int = 5) -> Drawing:
    """Two convex straight-line K_k, far apart, joined by a single edge."""
    left = convex_points(k)
    vertices = {}
    for i, p in enumerate(left):
        vertices[f"a{i}"] = p
        vertices[f"b{i}"] = Point(p.x + 10, p.y)
    edges = []
    for side in "ab":
        for i, j in itertools.combinations(range(k), 2):
            edges.append(_straight(f"{side}{i}{side}{j}", f"{side}{i}", f"{side}{j}", vertices))
    edges.append(_straight("bridge", f"a{k - 1}", "b0", vertices))
    return Drawing(vertices, edges)


def complete_bipartite(a: int, b: int) -> Drawing:
    vertices = {}
    for i in range(a):
        vertices[f"l{i}"] = point(0, Fraction(i * i + 1, 1) + Fraction(i, 7))
    for j in range(b):
        vertices[f"r{j}"] = point(5, Fraction(j * j + 2, 1) + Fraction(j, 5))
    edges = [_straight(f"l{i}r{j}", f"l{i}", f"r{j}", vertices) for i in range(a) for j in range(b)]
    return Drawing(vertices, edges)


# -- random drawings -----------------------------------------------------------------

def random_polyline_drawing(n: int, e: int, seed: int, max_bends: int = 2,
                            allow_parallel: bool = True, span: int = 60,
                            retries: int = 400) -> Drawing:
    """A random drawing in general position, built by rejection sampling."""
    if n < 2 and e > 0:
        raise GenerationFailed("need two vertices for an edge")
    rng = np.random.default_rng(seed)
    locs: set[Point] = set()
    vertices = {}
    while len(vertices) < n:
        p = point(int(rng.integers(0, span)), int(rng.integers(0, span)))
        if p not in locs:
            locs.add(p)
            vertices[f"v{len(vertices)}"] = p
    ids = list(vertices)
    d = Drawing(vertices)
    used = set()
    for k in range(e):
        for _ in range(retries):
            i, j = sorted(rng.choice(len(ids), size=2, replace=False).tolist())
            if not allow_parallel and (i, j) in used:
                continue
            bends = int(rng.integers(0, max_bends + 1))
            curve = [vertices[ids[i]]]
            curve += [point(Fraction(int(rng.integers(0, 4 * span)), 4),
                            Fraction(int(rng.integers(0, 4 * span)), 4)) for _ in range(bends)]
            curve.append(vertices[ids[j]])
            try:
                cand = d.with_edge(Edge(f"e{k}", ids[i], ids[j], tuple(curve)))
            except Exception:
                continue
            if validate_general_position(cand).ok:
                d = cand
                used.add((i, j))
                break
        else:
            raise GenerationFailed(f"could not place edge {k} after {retries} tries")
    return d


def random_planar_drawing(n: int, seed: int, span: int = 200, retries: int = 50) -> Drawing:
    """Straight-line Delaunay triangulation of random lattice points."""
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    for _ in range(retries):
        raw = {(int(x), int(y)) for x, y in rng.integers(0, span, size=(n, 2))}
        if len(raw) < n:
            continue
        coords = sorted(raw)
        tri = Delaunay(np.array(coords, float))
        vertices = {f"v{i}": point(x, y) for i, (x, y) in enumerate(coords)}
        pairs = set()
        for simplex in tri.simplices:
            for a, b in itertools.combinations(sorted(int(s) for s in simplex), 2):
                pairs.add((a, b))
        edges = [_straight(f"v{a}v{b}", f"v{a}", f"v{b}", vertices) for a, b in sorted(pairs)]
        try:
            d = Drawing(vertices, edges)
        except Exception:
            continue
        if validate_general_position(d).ok:
            return d
    raise GenerationFailed("no valid triangulation found")


# -- lens gadgets --------------------------------------------------------------------

GADGET_KINDS = ("between-crossings", "endpoint-to-crossing", "full-parallel-pair", "separated-mixed")


def _poly(*coords) -> tuple[Point, ...]:
    return tuple(point(x, y) for x, y in coords)


def empty_lens_gadget(kind: str) -> Drawing:
    """Small drawings with exactly one empty lens of the requested kind."""
    if kind == "between-crossings":
        V = {"a": point(0, 0), "b": point(6, 0), "c": point(1, 2), "d": point(5, 2),
             "g1": point(3, 3), "g2": point(3, -3)}
        E = [Edge("e1", "a", "b", _poly((0, 0), (6, 0))),
             Edge("e2", "c", "d", _poly((1, 2), (2, -1), (4, -1), (5, 2))),
             Edge("f", "g1", "g2", _poly((3, 3), (3, -3)))]
    elif kind == "endpoint-to-crossing":
        V = {"w": point(0, 0), "p": point(4, 0), "q": point(3, 2), "z": point(1, 4)}
        E = [Edge("e1", "w", "p", _poly((0, 0), (4, 0))),
             Edge("e2", "w", "q", _poly((0, 0), (2, -1), (3, 1), (3, 2)))]
    elif kind == "full-parallel-pair":
        V = {"u": point(0, 0), "v": point(4, 0), "z": point(2, 5)}
        E = [Edge("e1", "u", "v", _poly((0, 0), (4, 0))),
             Edge("e2", "u", "v", _poly((0, 0), (2, 1), (4, 0)))]
    elif kind == "separated-mixed":
        V = {"u": point(0, 0), "v": point(6, 0), "w": point(3, 0), "z": point(3, 6),
             "p": point(0, 4), "q": point(6, 4)}
        E = [Edge("e1", "u", "v", _poly((0, 0), (3, 3), (6, 0))),
             Edge("e2", "u", "v", _poly((0, 0), (3, -3), (6, 0))),
             Edge("g", "p", "q", _poly((0, 4), (2, 1), (4, 1), (6, 4)))]
    else:
        raise ValueError(f"unknown gadget kind {kind!r}; choose from {', '.join(GADGET_KINDS)}")
    return Drawing(V, E)


def nested_parallel_triple() -> Drawing:
    """Three parallel edges u-v with one vertex in each gap and one outside."""
    V = {"u": point(0, 0), "v": point(6, 0), "w1": point(3, 2), "w2": point(3, 4), "z": point(3, -2)}
    E = [Edge("e1", "u", "v", _poly((0, 0), (3, 1), (6, 0))),
         Edge("e2", "u", "v", _poly((0, 0), (3, 3), (6, 0))),
         Edge("e3", "u", "v", _poly((0, 0), (3, 5), (6, 0)))]
    return Drawing(V, E)


def x_drawing() -> Drawing:
    V = {"a": point(0, 0), "b": point(2, 2), "c": point(0, 2), "d": point(2, 0)}
    return Drawing(V, [Edge("e1", "a", "b", _poly((0, 0), (2, 2))),
                       Edge("e2", "c", "d", _poly((0, 2), (2, 0)))])


def build(spec: ConstructionSpec) -> Drawing:
    """Dispatch on a family name, as used by the command line."""
    fam = spec.family
    if fam == "separated-arc":
        return separated_arc_construction(spec.n, spec.resolution)
    if fam == "convex-complete":
        return convex_complete(spec.n)
    if fam == "even-cycle":
        return even_cycle(spec.r if spec.r is not None else max(1, (spec.n - 2) // 2))
    if fam == "random":
        return random_polyline_drawing(spec.n, spec.e if spec.e is not None else 2 * spec.n, spec.seed)
    if fam == "random-planar":
        return random_planar_drawing(spec.n, spec.seed)
    if fam.startswith("gadget-"):
        return empty_lens_gadget(fam[len("gadget-"):])
    raise ValueError(f"unknown family {fam!r}")


FAMILIES = ("separated-arc", "convex-complete", "even-cycle", "random", "random-planar",
            *(f"gadget-{k}" for k in GADGET_KINDS))
