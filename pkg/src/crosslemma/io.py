"""Drawing files and SVG output.

File format, line oriented::

    TMGD 1
    # comment
    V <id> <x> <y>
    E <id> <u> <v> <x1> <y1> ... <xk> <yk>

Coordinates are exact rationals written as ``p`` or ``p/q``.
"""
from __future__ import annotations

import hashlib
import re
from fractions import Fraction
from xml.sax.saxutils import escape

from .drawing import Drawing, Edge, crossings, empty_lenses, validate_general_position
from .errors import InvariantViolation, ParseError
from .geometry import Point

HEADER = "TMGD 1"
_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?\Z")


def _rational(token: str, line: int, col: int) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"not an exact rational: {token!r}", line, col)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {token!r}", line, col)
    return Fraction(token)


def _attr(text: str) -> str:
    return escape(text, {'"': "&quot;"})


def _tokens(text: str):
    """(token, column) pairs; columns are 1-based."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def parse_drawing(text: str, validate: bool = True) -> Drawing:
    """Parse a drawing file.

    Structural problems (unknown vertices, loops, curves not ending at their
    vertices) raise InvariantViolation; so do general-position violations
    unless ``validate`` is False.
    """
    lines = text.splitlines()
    seen_header = False
    vertices: dict[str, Point] = {}
    edges: list[Edge] = []
    edge_ids: set[str] = set()
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        if not seen_header:
            if [t for t, _ in toks] != ["TMGD", "1"]:
                raise ParseError(f"expected header {HEADER!r}", lineno, toks[0][1])
            seen_header = True
            continue
        kind, col = toks[0]
        if kind == "V":
            if len(toks) != 4:
                raise ParseError("vertex record needs: V id x y", lineno, col)
            vid = toks[1][0]
            if vid in vertices:
                raise ParseError(f"duplicate vertex id {vid!r}", lineno, toks[1][1])
            vertices[vid] = Point(_rational(toks[2][0], lineno, toks[2][1]),
                                  _rational(toks[3][0], lineno, toks[3][1]))
        elif kind == "E":
            coords = toks[4:]
            if len(toks) < 4 or len(coords) < 4 or len(coords) % 2:
                raise ParseError("edge record needs: E id u v and at least two points", lineno, col)
            eid, u, v = (t for t, _ in toks[1:4])
            if eid in edge_ids:
                raise ParseError(f"duplicate edge id {eid!r}", lineno, toks[1][1])
            for name, c in ((u, toks[2][1]), (v, toks[3][1])):
                if name not in vertices:
                    raise ParseError(f"unknown vertex {name!r}", lineno, c)
            values = [_rational(t, lineno, c) for t, c in coords]
            curve = tuple(Point(values[i], values[i + 1]) for i in range(0, len(values), 2))
            edge_ids.add(eid)
            edges.append(Edge(eid, u, v, curve))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno, col)
    if not seen_header:
        raise ParseError(f"missing header {HEADER!r}", 1, 1)
    d = Drawing(vertices, edges)
    if validate:
        report = validate_general_position(d)
        if not report.ok:
            detail = "; ".join(str(f) for f in report.findings[:5])
            raise InvariantViolation(f"drawing violates general position: {detail}", report.findings)
    return d


def _check_id(name: str) -> str:
    if not name or "#" in name or any(ch.isspace() for ch in name):
        raise ValueError(f"id {name!r} cannot be written: ids must be non-empty, without spaces or '#'")
    return name


def serialize_drawing(d: Drawing) -> str:
    for name in (*d.vertices, *d.edges):
        _check_id(name)
    out = [HEADER]
    for vid, p in d.vertices.items():
        out.append(f"V {vid} {p.x} {p.y}")
    for e in d.edges.values():
        pts = " ".join(f"{p.x} {p.y}" for p in e.curve)
        out.append(f"E {e.id} {e.u} {e.v} {pts}")
    return "\n".join(out) + "\n"


def load_drawing(path, validate: bool = True) -> Drawing:
    with open(path, encoding="utf-8") as fh:
        return parse_drawing(fh.read(), validate)


def save_drawing(d: Drawing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_drawing(d))


def render_svg(d: Drawing, *, show_crossings: bool = True, shade_lenses: bool = False,
               width: int = 640, source: str | None = None) -> str:
    """SVG 1.1 picture of a drawing; coordinates are converted to floats here only."""
    digest = hashlib.sha256((source if source is not None else serialize_drawing(d)).encode()).hexdigest()
    pts = list(d.vertices.values()) + [p for e in d.edges.values() for p in e.curve]
    if pts:
        xs, ys = [float(p.x) for p in pts], [float(p.y) for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = 0.0
    span = max(x1 - x0, y1 - y0) or 1.0
    margin = 20
    scale = (width - 2 * margin) / span
    height = int(round((y1 - y0) * scale)) + 2 * margin

    def xy(p):
        return (f"{margin + (float(p.x) - x0) * scale:.3f}",
                f"{height - margin - (float(p.y) - y0) * scale:.3f}")

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f"<!-- source sha256 {digest} -->",
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
           f'height="{height}" viewBox="0 0 {width} {height}">']
    if shade_lenses and d.edges and validate_general_position(d).ok:
        out.append('<g class="lenses" fill="#f4b183" fill-opacity="0.5" stroke="none">')
        for lens in empty_lenses(d):
            path = " ".join("{},{}".format(*xy(p)) for p in lens.boundary)
            out.append(f'<polygon points="{path}"/>')
        out.append("</g>")
    out.append('<g class="edges" fill="none" stroke="#1f4e79" stroke-width="1">')
    for e in d.edges.values():
        coords = [xy(p) for p in e.curve]
        path = "M " + " L ".join(f"{a} {b}" for a, b in coords)
        out.append(f'<path id="edge-{_attr(e.id)}" d="{path}"/>')
    out.append("</g>")
    out.append('<g class="vertices" fill="#000000">')
    for vid, p in d.vertices.items():
        a, b = xy(p)
        out.append(f'<circle id="vertex-{_attr(vid)}" cx="{a}" cy="{b}" r="3"/>')
    out.append("</g>")
    if show_crossings and d.edges and validate_general_position(d).ok:
        out.append('<g class="crossings" fill="#c00000">')
        for c in crossings(d):
            a, b = xy(c.point)
            out.append(f'<rect class="crossing" x="{float(a) - 2:.3f}" y="{float(b) - 2:.3f}" '
                       f'width="4" height="4"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
