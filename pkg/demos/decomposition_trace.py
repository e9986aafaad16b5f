#!/usr/bin/env python3
"""Trace of the recursive bisection on a small separated drawing.

Every step lists the part sizes, the size floor a part must reach to be split,
and the two sides of the stopping rule. The run ends once (4/5)^i drops below
the right-hand side.
"""
from crosslemma import constructions, style_params
from crosslemma.decomposition import check_bisection_inequality, decompose

d = constructions.separated_arc_construction(6)
chk = check_bisection_inequality(d, "separated")
print(f"bisection width {chk.width} vs 44*sqrt(cr + max_degree*e + n) = {chk.rhs:.1f}\n")
trace = decompose(d, style_params("separated"))
print(trace.to_text())
