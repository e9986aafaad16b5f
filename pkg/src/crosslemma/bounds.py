"""Crossing lower bounds and edge-count bounds, with exact verdicts.

Constants are exact rationals.  A bound with a fractional exponent is never
compared in floating point: for x = p/q both sides are raised to the q-th
power first.  Floats (via mpmath) are only used for the displayed value and
ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .drawing import Drawing, crossing_number
from .errors import DomainError, StyleViolation
from .styles import StyleParams, check_style

mpmath.mp.dps = 50


def x_of_b(b) -> Fraction:
    b = Fraction(b)
    if b <= 1:
        raise DomainError(f"b must exceed 1, got {b}")
    return 1 / (b - 1)


def _rational_power(base: Fraction, exponent: Fraction) -> Fraction:
    """``base ** exponent`` when the result is rational; raises DomainError otherwise."""
    p, q = exponent.numerator, exponent.denominator
    raised = base ** p
    num = _exact_root(raised.numerator, q)
    den = _exact_root(raised.denominator, q)
    if num is None or den is None:
        raise DomainError(f"{base}^{exponent} is irrational")
    return Fraction(num, den)


def _exact_root(value: int, q: int) -> int | None:
    if value < 0:
        return None
    guess = round(value ** (1 / q)) if value < 2 ** 1000 else int(mpmath.root(value, q))
    for cand in (guess - 1, guess, guess + 1):
        if cand >= 0 and cand ** q == value:
            return cand
    return None


def alpha(params: StyleParams) -> Fraction:
    """alpha = 2^-(2x+14) * k2^-2 * k3^-x, exact when it is rational."""
    x = x_of_b(params.b)
    return (_rational_power(Fraction(2), -(2 * x + 14))
            / params.k2 ** 2 / _rational_power(params.k3, x))


def alpha_mp(params: StyleParams) -> mpmath.mpf:
    """alpha in high precision; works for any positive constants."""
    x = x_of_b(params.b)
    xf = mpmath.mpf(x.numerator) / x.denominator
    k2 = mpmath.mpf(params.k2.numerator) / params.k2.denominator
    k3 = mpmath.mpf(params.k3.numerator) / params.k3.denominator
    return mpmath.power(2, -(2 * xf + 14)) / k2 ** 2 / mpmath.power(k3, xf)


def _alpha_power(params: StyleParams, q: int) -> Fraction:
    """alpha^q, exact for the denominator q of x(b)."""
    x = x_of_b(params.b)
    p = x.numerator
    # alpha^q = 2^-(2p+14q) * k2^-2q * k3^-p
    return Fraction(1, 2 ** (2 * p + 14 * q)) / params.k2 ** (2 * q) / params.k3 ** p


def beta(params: StyleParams) -> float:
    """beta = alpha^(-1/(x+2)); above e = beta*n the decomposition argument is needed."""
    x = x_of_b(params.b)
    xf = mpmath.mpf(x.numerator) / x.denominator
    return float(mpmath.power(alpha_mp(params), -1 / (xf + 2)))


def beta_identity(params: StyleParams) -> tuple[int, Fraction]:
    """(k, v) with beta^k = v exactly: k = p + 2q and v = alpha^-q for x = p/q."""
    x = x_of_b(params.b)
    p, q = x.numerator, x.denominator
    return p + 2 * q, 1 / _alpha_power(params, q)


def threshold(n: int, params: StyleParams) -> Fraction:
    """Edges needed for the lemma to apply: strictly more than (k1 + 1) n."""
    return (params.k1 + 1) * n


def crossing_lower_bound(n: int, e: int, params: StyleParams) -> float | None:
    """alpha e^(x+2) / n^(x+1), or None when e <= (k1+1) n."""
    if n < 1 or e < 0:
        raise DomainError("need n >= 1 and e >= 0")
    if e <= threshold(n, params):
        return None
    x = x_of_b(params.b)
    xf = mpmath.mpf(x.numerator) / x.denominator
    return float(alpha_mp(params) * mpmath.power(e, xf + 2) / mpmath.power(n, xf + 1))


def bound_holds(cr: int, n: int, e: int, params: StyleParams) -> bool:
    """Exact test of cr >= alpha e^(x+2) / n^(x+1)."""
    x = x_of_b(params.b)
    p, q = x.numerator, x.denominator
    return cr ** q * n ** (p + q) >= _alpha_power(params, q) * e ** (p + 2 * q)


HEADLINES = {
    "separated": "alpha e^2.5 / n^1.5",
    "locally-starlike": "alpha e^3 / n^2",
    "branching": "alpha e^3 / n^2",
    "multiplicity": "alpha' e^3 / (m n^2)",
    "girth": "alpha_r e^(r+2) / n^(r+1)",
}


def headline_threshold(n: int, params: StyleParams) -> int:
    """Threshold in the classical statement of each variant.

    The multiplicity variant is classically stated for e > 4mn, while the
    general theorem gives e > (3m+1)n; both are reported.
    """
    if params.name == "multiplicity":
        return 4 * params.m * n
    return 4 * n


@dataclass(frozen=True)
class BoundReport:
    n: int
    e: int
    cr: int
    style: str
    x: Fraction
    alpha: Fraction | None
    alpha_float: float
    beta: float
    threshold: Fraction
    applicable: bool
    bound: float | None
    satisfied: bool | None
    ratio: float | None
    headline: str = ""
    headline_threshold: int = 0
    linear_bound_holds: bool | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "n/a"
        return "satisfied" if self.satisfied else "VIOLATED"


def bound_report(n: int, e: int, cr: int, params: StyleParams) -> BoundReport:
    x = x_of_b(params.b)
    try:
        a = alpha(params)
    except DomainError:
        a = None
    thr = threshold(n, params)
    applicable = e > thr
    bound = crossing_lower_bound(n, e, params) if applicable else None
    satisfied = bound_holds(cr, n, e, params) if applicable else None
    ratio = (cr / bound if bound else math.inf) if applicable else None
    linear = cr >= e - params.k1 * n if applicable else None
    notes = []
    if params.name == "multiplicity":
        notes.append(f"threshold (3m+1)n = {thr}; classical statement uses 4mn = {4 * params.m * n}")
    return BoundReport(n, e, cr, params.label, x, a, float(alpha_mp(params)), beta(params), thr,
                       applicable, bound, satisfied, ratio, HEADLINES.get(params.name, ""),
                       headline_threshold(n, params), linear, tuple(notes))


def verify_crossing_lemma(d: Drawing, params: StyleParams) -> BoundReport:
    """Check a drawing against the lower bound; the drawing must be in the style."""
    rep = check_style(d, params.name, params.m, params.r)
    if not rep.holds:
        raise StyleViolation(f"drawing is not {params.label}: {rep.witness}")
    return bound_report(d.n, d.e, crossing_number(d), params)


@dataclass(frozen=True)
class EdgeCheck:
    name: str
    value: int
    limit: Fraction | int | None
    holds: bool


def verify_edge_bounds(d: Drawing, params: StyleParams) -> list[EdgeCheck]:
    """Degree and edge-count bounds that hold for every drawing in the style."""
    n, e, delta = d.n, d.e, d.max_degree()
    cr = crossing_number(d)
    checks = []
    name = params.name
    if name == "separated":
        checks.append(EdgeCheck("max degree <= (n-1)(n-2)", delta, (n - 1) * (n - 2), delta <= (n - 1) * (n - 2)))
        lim = math.comb(n, 2) * (n - 2)
        checks.append(EdgeCheck("e <= C(n,2)(n-2)", e, lim, e <= lim))
    elif name in ("locally-starlike", "branching"):
        checks.append(EdgeCheck("max degree <= 2n-4", delta, 2 * n - 4, delta <= max(2 * n - 4, 0) or n < 3))
        checks.append(EdgeCheck("e <= n(n-2)", e, n * (n - 2), e <= n * (n - 2) or n < 3))
    elif name == "multiplicity":
        lim = params.m * math.comb(n, 2)
        checks.append(EdgeCheck("e <= m C(n,2)", e, lim, e <= lim))
    elif name == "girth":
        # e <= k3 n^(1+1/r), compared as e^r <= k3^r n^(r+1).
        r = params.r
        holds = e ** r <= params.k3 ** r * n ** (r + 1)
        checks.append(EdgeCheck("e <= k3 n^(1+1/r)", e, None, holds))
    if cr == 0 and n >= 3:
        lim = params.k1 * n
        checks.append(EdgeCheck("crossing-free: e <= k1 n", e, lim, e <= lim))
        if name in ("separated", "locally-starlike", "branching"):
            checks.append(EdgeCheck("crossing-free: e <= 3n-6", e, 3 * n - 6, e <= 3 * n - 6))
    return checks


def tightness_ratio(reports) -> list[float]:
    """cr / (e^(x+2) / n^(x+1)) per report, i.e. the bound without its constant."""
    out = []
    for r in reports:
        xf = mpmath.mpf(r.x.numerator) / r.x.denominator
        scale = mpmath.power(r.e, xf + 2) / mpmath.power(r.n, xf + 1)
        out.append(float(r.cr / scale) if scale else math.inf)
    return out
