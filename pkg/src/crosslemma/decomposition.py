"""Style-aware bisection width and the recursive decomposition.

A bisection splits the vertex set into two parts of at least n/5 vertices
each.  The edges that must go are the cut edges plus, for styles that can
break when vertices disappear (the separated family), the fewest edges
inside each part whose removal makes the part satisfy the style again.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .drawing import Drawing, crossing_number, lens_of_parallel_pair
from .errors import NoFeasibleBipartition, NotSimple, StyleViolation, TooLargeForOracle
from .styles import StyleParams, check_style, needs_separation

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class Bipartition:
    part1: tuple[str, ...]
    part2: tuple[str, ...]
    cut: tuple[str, ...]
    repair: tuple[str, ...] = ()

    @property
    def width(self) -> int:
        return len(self.cut) + len(self.repair)

    @property
    def removed(self) -> tuple[str, ...]:
        return self.cut + self.repair


def balanced(size: int, n: int) -> bool:
    """Both sides hold at least n/5 vertices (real division, ties allowed)."""
    return 5 * size >= n and 5 * (n - size) >= n


class _Model:
    """Bit-mask view of a drawing for fast width evaluation."""

    def __init__(self, d: Drawing, style: str, m: int | None = None, r: int | None = None):
        self.d = d
        self.style, self.m, self.r = style, m, r
        self.vids = list(d.vertices)
        self.n = len(self.vids)
        self.index = {v: i for i, v in enumerate(self.vids)}
        self.edges = list(d.edges.values())
        weight: dict[tuple[int, int], int] = {}
        for e in self.edges:
            key = tuple(sorted((self.index[e.u], self.index[e.v])))
            weight[key] = weight.get(key, 0) + 1
        self.pairs = np.array(list(weight), dtype=np.int64).reshape(-1, 2)
        self.weights = np.array(list(weight.values()), dtype=np.int64)
        self._pair_list, self._weight_list = list(weight), list(weight.values())
        self.bundles = []
        if needs_separation(style):
            for ends, eids in d.bundles.items():
                if len(eids) < 2:
                    continue
                u, v = sorted(self.index[w] for w in ends)
                self.bundles.append((u, v, eids, self._compat_masks(eids)))
        self._clique_cache: dict = {}

    def _compat_masks(self, eids):
        """For each pair in a bundle, masks of vertices inside and outside their lens."""
        out = {}
        for a, b in itertools.combinations(range(len(eids)), 2):
            try:
                lens = lens_of_parallel_pair(self.d, eids[a], eids[b])
            except NotSimple:
                out[(a, b)] = (0, 0)
                continue
            inside = sum(1 << self.index[w] for w in lens.interior_vertices)
            outside = sum(1 << self.index[w] for w in lens.exterior_vertices)
            out[(a, b)] = (inside, outside)
        return out

    def cuts(self, masks: np.ndarray) -> np.ndarray:
        total = np.zeros(len(masks), dtype=np.int64)
        for (u, v), w in zip(self.pairs, self.weights):
            total += w * (((masks >> u) ^ (masks >> v)) & 1)
        return total

    def _keep(self, k: int, part: int) -> tuple[int, ...]:
        """Largest pairwise separated subset of bundle k within vertex mask ``part``."""
        u, v, eids, compat = self.bundles[k]
        key = (k, part)
        if key in self._clique_cache:
            return self._clique_cache[key]
        size = len(eids)
        ok = [[False] * size for _ in range(size)]
        for (a, b), (inside, outside) in compat.items():
            ok[a][b] = ok[b][a] = bool(inside & part) and bool(outside & part)
        best: tuple[int, ...] = (0,)
        for sz in range(size, 1, -1):
            for combo in itertools.combinations(range(size), sz):
                if all(ok[a][b] for a, b in itertools.combinations(combo, 2)):
                    best = combo
                    break
            if len(best) == sz:
                break
        self._clique_cache[key] = best
        return best

    def repair_count(self, mask: int) -> int:
        full = (1 << self.n) - 1
        total = 0
        for part in (full & ~mask, mask):
            for k, (u, v, eids, _) in enumerate(self.bundles):
                if (part >> u) & 1 and (part >> v) & 1:
                    total += len(eids) - len(self._keep(k, part))
        return total

    def width(self, mask: int) -> int:
        cut = sum(w for (u, v), w in zip(self._pair_list, self._weight_list) if ((mask >> u) ^ (mask >> v)) & 1)
        return cut + self.repair_count(mask)

    def bipartition(self, mask: int) -> Bipartition:
        full = (1 << self.n) - 1
        part2 = tuple(v for v in self.vids if (mask >> self.index[v]) & 1)
        part1 = tuple(v for v in self.vids if not (mask >> self.index[v]) & 1)
        cut = tuple(e.id for e in self.edges
                    if ((mask >> self.index[e.u]) ^ (mask >> self.index[e.v])) & 1)
        repair = []
        for part in (full & ~mask, mask):
            for k, (u, v, eids, _) in enumerate(self.bundles):
                if (part >> u) & 1 and (part >> v) & 1:
                    keep = self._keep(k, part)
                    repair.extend(eid for i, eid in enumerate(eids) if i not in keep)
        order = {e.id: i for i, e in enumerate(self.edges)}
        return Bipartition(part1, part2, cut, tuple(sorted(repair, key=order.get)))

    def parts_in_style(self, bp: Bipartition) -> bool:
        for part in (bp.part1, bp.part2):
            sub = self.d.induced(part, bp.removed)
            if not check_style(sub, self.style, self.m, self.r).holds:
                return False
        return True


def bisection_width_oracle(d: Drawing, style: str, m: int | None = None,
                           r: int | None = None) -> tuple[int, Bipartition]:
    """Exact style-aware bisection width by exhaustive search (n <= 20)."""
    n = d.n
    if n > ORACLE_LIMIT:
        raise TooLargeForOracle(f"n = {n} exceeds the oracle limit {ORACLE_LIMIT}")
    if n < 2:
        raise NoFeasibleBipartition("need at least two vertices")
    model = _Model(d, style, m, r)
    # Vertex 0 always stays in part 1, which halves the search.
    masks = np.arange(0, 1 << n, 2, dtype=np.int64)
    sizes = np.array([bin(int(x)).count("1") for x in masks])
    keep = (5 * sizes >= n) & (5 * (n - sizes) >= n)
    masks = masks[keep]
    cuts = model.cuts(masks)
    order = np.lexsort((masks, cuts))
    best_width, best = math.inf, None
    for idx in order:
        cut = int(cuts[idx])
        if cut >= best_width:
            break
        mask = int(masks[idx])
        width = cut + model.repair_count(mask) if model.bundles else cut
        if width < best_width:
            bp = model.bipartition(mask)
            if model.parts_in_style(bp):
                best_width, best = width, bp
    if best is None:
        raise NoFeasibleBipartition("no balanced bipartition keeps both parts in style")
    return best_width, best


# Above this size the local search drops pair swaps and uses fewer starts.
SWAP_LIMIT = 32


def _start_orders(d: Drawing, model: _Model, roots: int = 8) -> list[list[int]]:
    """Vertex orders whose balanced prefixes seed the local search."""
    n = model.n
    by_x = sorted(range(n), key=lambda i: (d.vertices[model.vids[i]].x, d.vertices[model.vids[i]].y))
    by_y = sorted(range(n), key=lambda i: (d.vertices[model.vids[i]].y, d.vertices[model.vids[i]].x))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in model.pairs.tolist():
        adj[u].append(v)
        adj[v].append(u)
    orders = [by_x, by_y]
    for root in sorted({by_x[(k * (n - 1)) // max(roots - 1, 1)] for k in range(roots)}):
        seen, queue = {root}, [root]
        for x in queue:
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        queue += [i for i in by_x if i not in seen]
        orders.append(queue)
    return orders


def _improve(model: _Model, mask: int, width: int, swaps: bool = True) -> tuple[int, int]:
    """First-improvement search over single moves and, optionally, swaps."""
    n = model.n
    improved = True
    while improved:
        improved = False
        size = bin(mask).count("1")
        candidates = []
        for i in range(n):
            flipped = mask ^ (1 << i)
            if balanced(size + (1 if flipped > mask else -1), n):
                candidates.append(flipped)
        ins = [i for i in range(n) if (mask >> i) & 1]
        outs = [i for i in range(n) if not (mask >> i) & 1]
        if swaps:
            candidates.extend(mask ^ (1 << i) ^ (1 << j) for i in ins for j in outs)
        for cand in candidates:
            w = model.width(cand)
            if w < width:
                mask, width, improved = cand, w, True
                break
    return mask, width


def bisection_heuristic(d: Drawing, style: str, m: int | None = None,
                        r: int | None = None) -> tuple[int, Bipartition]:
    """Best of several sweeps (by x, by y, breadth-first from spread-out roots),
    each followed by move/swap local search."""
    n = d.n
    if n < 2:
        raise NoFeasibleBipartition("need at least two vertices")
    model = _Model(d, style, m, r)
    small = n <= SWAP_LIMIT
    best_mask, best_width = None, math.inf
    for order in _start_orders(d, model, roots=8 if small else 2):
        start, start_width = None, math.inf
        mask = 0
        for k, i in enumerate(order[:-1]):
            mask |= 1 << i
            if balanced(k + 1, n):
                w = model.width(mask)
                if w < start_width:
                    start, start_width = mask, w
        mask, width = _improve(model, start, start_width, swaps=small)
        if width < best_width:
            best_mask, best_width = mask, width
    bp = model.bipartition(best_mask)
    if not model.parts_in_style(bp):  # pragma: no cover - repairs restore the style
        raise StyleViolation("heuristic bipartition leaves a part out of style")
    return best_width, bp


@dataclass(frozen=True)
class BisectionCheck:
    width: int
    cr: int
    max_degree: int
    e: int
    n: int
    k2: Fraction
    holds: bool
    rhs: float
    margin: float
    bipartition: Bipartition


def check_bisection_inequality(d: Drawing, style: str, k2=44, m: int | None = None,
                               r: int | None = None) -> BisectionCheck:
    """Oracle width against k2 * sqrt(cr + max_degree * e + n), compared exactly on squares."""
    k2 = Fraction(k2)
    width, bp = bisection_width_oracle(d, style, m, r)
    cr, delta = crossing_number(d), d.max_degree()
    inner = cr + delta * d.e + d.n
    holds = width * width <= k2 * k2 * inner
    rhs = float(k2) * math.sqrt(inner)
    return BisectionCheck(width, cr, delta, d.e, d.n, k2, holds, rhs, rhs - width, bp)


# -- decomposition ------------------------------------------------------------------

@dataclass(frozen=True)
class PartSummary:
    vertices: tuple[str, ...]
    n: int
    e: int
    split: bool
    width: int | None = None


@dataclass(frozen=True)
class StepRecord:
    i: int
    parts: tuple[PartSummary, ...]
    big_parts: int            # m_i
    total_parts: int          # M_i
    size_floor: Fraction      # (4/5)^(i+1) n
    size_ceiling: Fraction    # (4/5)^i n
    stop_lhs: Fraction        # (4/5)^i
    stop_rhs: float           # e^x / ((2 k3)^x n^(x+1))
    stop: bool
    removed: tuple[str, ...]
    sizes_ok: bool            # part sizes within the step's bounds
    count_ok: bool            # m_i <= (5/4)^(i+1)


@dataclass
class DecompositionTrace:
    n: int
    e: int
    style: str
    x: Fraction
    k3: Fraction
    cutter: str
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def k(self) -> int:
        """Index of the last executed step; the algorithm stops in step k+1."""
        return self.steps[-1].i if self.steps else 0

    @property
    def removed_total(self) -> int:
        return sum(len(s.removed) for s in self.steps)

    @property
    def removed_ratio(self) -> float:
        return self.removed_total / self.e if self.e else 0.0

    @property
    def invariants_hold(self) -> bool:
        return all(s.sizes_ok and s.count_ok for s in self.steps)

    def to_text(self) -> str:
        lines = [f"# decomposition style={self.style} n={self.n} e={self.e} x={self.x} "
                 f"cutter={self.cutter}",
                 "# a part is split when its size is >= (4/5)^(i+1) n (ties are split)"]
        for s in self.steps:
            sizes = ",".join(str(p.n) for p in s.parts)
            lines.append(
                f"step {s.i}: M={s.total_parts} m={s.big_parts} sizes=[{sizes}] "
                f"floor={float(s.size_floor):.4f} stop_lhs={float(s.stop_lhs):.6f} "
                f"stop_rhs={s.stop_rhs:.6f} stop={'yes' if s.stop else 'no'} "
                f"removed={len(s.removed)} size_bounds={'ok' if s.sizes_ok else 'FAIL'} "
                f"count_bound={'ok' if s.count_ok else 'FAIL'}")
        lines.append(f"k={self.k} removed_total={self.removed_total} "
                     f"removed_ratio={self.removed_ratio:.4f}")
        return "\n".join(lines)


def stop_condition(i: int, n: int, e: int, params: StyleParams) -> bool:
    """(4/5)^i < e^x / ((2 k3)^x n^(x+1)), decided exactly.

    With x = p/q both sides are raised to the q-th power.
    """
    x = 1 / (params.b - 1)
    p, q = x.numerator, x.denominator
    lhs = Fraction(4, 5) ** (i * q)
    rhs = Fraction(e ** p) / ((2 * params.k3) ** p * Fraction(n) ** (p + q))
    return lhs < rhs


def _stop_rhs(n: int, e: int, params: StyleParams) -> float:
    x = float(1 / (params.b - 1))
    return e ** x / ((2 * float(params.k3)) ** x * n ** (x + 1))


def decompose(d: Drawing, params: StyleParams, cutter: str = "oracle",
              max_steps: int | None = None) -> DecompositionTrace:
    """Run the decomposition, recording every step."""
    if d.e < 1:
        raise ValueError("decomposition needs at least one edge")
    rep = check_style(d, params.name, params.m, params.r)
    if not rep.holds:
        raise StyleViolation(f"drawing is not {params.label}: {rep.witness}")
    if cutter not in ("oracle", "heuristic"):
        raise ValueError("cutter must be 'oracle' or 'heuristic'")
    n, e = d.n, d.e
    trace = DecompositionTrace(n, e, params.label, 1 / (params.b - 1), params.k3, cutter)
    parts = [d]
    limit = max_steps if max_steps is not None else 10 * (n + 2)
    for i in range(limit):
        floor = Fraction(4, 5) ** (i + 1) * n
        ceiling = Fraction(4, 5) ** i * n
        stop = stop_condition(i, n, e, params)
        big = [p for p in parts if p.n >= floor]
        sizes_ok = all(p.n <= ceiling for p in parts)
        count_ok = len(big) <= Fraction(5, 4) ** (i + 1)
        summaries, removed, nxt = [], [], []
        for p in parts:
            splits = not stop and p.n >= floor and p.n >= 2
            width = None
            if splits:
                use_oracle = cutter == "oracle" and p.n <= ORACLE_LIMIT
                cut = bisection_width_oracle if use_oracle else bisection_heuristic
                width, bp = cut(p, params.name, params.m, params.r)
                removed.extend(bp.removed)
                for side in (bp.part1, bp.part2):
                    sub = p.induced(side, bp.removed)
                    if not check_style(sub, params.name, params.m, params.r).holds:
                        raise StyleViolation("a part left the style after bisection")
                    nxt.append(sub)
            else:
                nxt.append(p)
            summaries.append(PartSummary(tuple(p.vertices), p.n, p.e, splits, width))
        trace.steps.append(StepRecord(i, tuple(summaries), len(big), len(parts), floor, ceiling,
                                      Fraction(4, 5) ** i, _stop_rhs(n, e, params), stop,
                                      tuple(removed), sizes_ok, count_ok))
        if stop:
            return trace
        parts = nxt
    return trace
