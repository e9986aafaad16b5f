"""Exact planar primitives over the rationals.

Every predicate here works on :class:`fractions.Fraction` coordinates, so
orientation, intersection and containment answers are exact.  Floats never
enter a decision; callers may use :func:`float_bbox` only to prune work.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .errors import GeometryError, NotClosed, NotSimple

Scalar = Fraction
Number = Union[int, Fraction, str]


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def point(x: Number, y: Number) -> Point:
    """Build a point, converting ints, strings ('3/4') or Fractions exactly."""
    return Point(Fraction(x), Fraction(y))


class Segment(NamedTuple):
    a: Point
    b: Point


def segment(a: Point, b: Point) -> Segment:
    if a == b:
        raise GeometryError(f"degenerate segment at {a}")
    return Segment(a, b)


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class IntersectionKind(enum.Enum):
    EMPTY = "empty"
    PROPER = "proper"
    TOUCH = "touch"
    OVERLAP = "overlap"


class Intersection(NamedTuple):
    kind: IntersectionKind
    point: Point | None = None
    # Parameters of ``point`` along each segment (only for PROPER).
    t1: Fraction | None = None
    t2: Fraction | None = None


class Location(enum.Enum):
    INTERIOR = "interior"
    EXTERIOR = "exterior"
    ON_CURVE = "on-curve"


_EMPTY = Intersection(IntersectionKind.EMPTY)
_OVERLAP = Intersection(IntersectionKind.OVERLAP)


def _cross_parts(o: Point, a: Point, b: Point) -> tuple[int, int]:
    """Numerator and (positive) denominator of :func:`cross`, in plain ints."""
    ox, oy, ax, ay, bx, by = o.x, o.y, a.x, a.y, b.x, b.y
    oxn, oxd = ox.numerator, ox.denominator
    oyn, oyd = oy.numerator, oy.denominator
    n1 = ax.numerator * oxd - oxn * ax.denominator
    d1 = ax.denominator * oxd
    n2 = by.numerator * oyd - oyn * by.denominator
    d2 = by.denominator * oyd
    n3 = ay.numerator * oyd - oyn * ay.denominator
    d3 = ay.denominator * oyd
    n4 = bx.numerator * oxd - oxn * bx.denominator
    d4 = bx.denominator * oxd
    return n1 * n2 * d3 * d4 - n3 * n4 * d1 * d2, d1 * d2 * d3 * d4


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of (a - o) and (b - o)."""
    num, den = _cross_parts(o, a, b)
    return Fraction(num, den)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(_sign(cross(p, q, r)))


def _within_box(p: Point, a: Point, b: Point) -> bool:
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when ``p`` lies on the closed segment ab."""
    return _within_box(p, a, b) and cross(a, b, p) == 0


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def segment_intersection(s1: Sequence[Point], s2: Sequence[Point]) -> Intersection:
    """Classify how two closed segments meet.

    PROPER: the open interiors cross transversally in one point.
    TOUCH: they share exactly one point and it is an endpoint of one of them.
    OVERLAP: they share a piece of positive length.
    """
    p1, p2 = s1
    p3, p4 = s2
    if p1 == p2 or p3 == p4:
        # A degenerate segment is a point: it touches the other one or misses it.
        q, (a, b) = (p1, (p3, p4)) if p1 == p2 else (p3, (p1, p2))
        return Intersection(IntersectionKind.TOUCH, q) if on_segment(q, a, b) else _EMPTY
    n1, e1 = _cross_parts(p3, p4, p1)
    n2, e2 = _cross_parts(p3, p4, p2)
    n3, e3 = _cross_parts(p1, p2, p3)
    n4, e4 = _cross_parts(p1, p2, p4)
    s_1, s_2, s_3, s_4 = _sign(n1), _sign(n2), _sign(n3), _sign(n4)

    if s_1 * s_2 < 0 and s_3 * s_4 < 0:
        # t = d1 / (d1 - d2) with d = n / e.
        t1 = Fraction(n1 * e2, n1 * e2 - n2 * e1)
        t2 = Fraction(n3 * e4, n3 * e4 - n4 * e3)
        return Intersection(IntersectionKind.PROPER, lerp(p1, p2, t1), t1, t2)

    if s_1 == 0 and s_2 == 0:
        # Collinear (s_3 == s_4 == 0 follows).  Compare along the dominant axis.
        axis = 0 if p1.x != p2.x else 1
        lo1, hi1 = sorted((p1[axis], p2[axis]))
        lo2, hi2 = sorted((p3[axis], p4[axis]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return _EMPTY
        if lo < hi:
            return _OVERLAP
        for q in (p1, p2):
            if q[axis] == lo:
                return Intersection(IntersectionKind.TOUCH, q)
        raise AssertionError("unreachable")

    for s, q, a, b in ((s_1, p1, p3, p4), (s_2, p2, p3, p4),
                       (s_3, p3, p1, p2), (s_4, p4, p1, p2)):
        if s == 0 and _within_box(q, a, b):
            return Intersection(IntersectionKind.TOUCH, q)
    return _EMPTY


def _loop_segments(curve: Sequence[Point]):
    return zip(curve[:-1], curve[1:])


def is_simple_loop(curve: Sequence[Point]) -> bool:
    """Whether a closed polyline (first point == last) is free of self-contact."""
    segs = list(_loop_segments(curve))
    k = len(segs)
    if k < 3:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            res = segment_intersection(segs[i], segs[j])
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent:
                if res.kind is IntersectionKind.OVERLAP:
                    return False
                if res.kind is IntersectionKind.TOUCH:
                    shared = segs[i][1] if j == i + 1 else segs[i][0]
                    if res.point != shared:
                        return False
                # Adjacent segments can only meet at the shared vertex.
                if res.kind is IntersectionKind.PROPER:
                    return False
            elif res.kind is not IntersectionKind.EMPTY:
                return False
    return True


def point_in_closed_curve(p: Point, curve: Sequence[Point], check: bool = True) -> Location:
    """Exact even-odd classification of ``p`` against a simple closed polyline.

    ``curve`` repeats its first point at the end.  With ``check=False`` the
    closedness and simplicity checks are skipped (internal callers that build
    loops they already know to be simple).
    """
    if check:
        if len(curve) < 4 or curve[0] != curve[-1]:
            raise NotClosed("curve must start and end at the same point")
        if not is_simple_loop(curve):
            raise NotSimple("curve touches itself")
    inside = False
    px, py = p
    for a, b in _loop_segments(curve):
        ay, by = a.y, b.y
        if (ay < py and by < py) or (ay > py and by > py):
            continue
        o = _cross_parts(a, b, p)[0]
        if o == 0 and min(a.x, b.x) <= px <= max(a.x, b.x):
            return Location.ON_CURVE
        if (ay > py) != (by > py):
            if (o > 0) == (by > ay):
                inside = not inside
    return Location.INTERIOR if inside else Location.EXTERIOR


def signed_area2(loop: Sequence[Point]) -> Fraction:
    """Twice the signed area of a closed polyline (positive = counterclockwise)."""
    total = Fraction(0)
    for a, b in _loop_segments(loop):
        total += a.x * b.y - a.y * b.x
    return total


def float_bbox(points: Sequence[Point]) -> tuple[float, float, float, float]:
    """A float bounding box padded so that it contains the exact one."""
    xs = [float(q.x) for q in points]
    ys = [float(q.y) for q in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = 1e-9 * (1.0 + max(abs(x0), abs(x1), abs(y0), abs(y1)))
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def snap(value: float, grid: int) -> Fraction:
    """Round a float to the nearest multiple of ``1/grid``."""
    return Fraction(round(value * grid), grid)
