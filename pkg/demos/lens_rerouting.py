#!/usr/bin/env python3
"""Removing empty lenses, then planarizing.

Each gadget has one empty lens. Rerouting pulls one boundary edge across the
lens, which never adds a crossing. Planarizing afterwards gives a plane
drawing that stays separated, so e <= 3n - 6 holds for it.
"""
from crosslemma import constructions, crossing_number, empty_lenses
from crosslemma.styles import is_separated
from crosslemma.transforms import planarize, reroute_to_fixpoint

for kind in constructions.GADGET_KINDS:
    d = constructions.empty_lens_gadget(kind)
    out = reroute_to_fixpoint(d)
    flat = planarize(out)
    left = [lens.kind.value for lens in empty_lenses(out)]
    print(f"{kind}:")
    print(f"  cr {crossing_number(d)} -> {crossing_number(out)}, empty lenses left: {left or 'none'}")
    print(f"  planarized n={flat.n} e={flat.e} separated={bool(is_separated(flat))} "
          f"3n-6={3 * flat.n - 6}")
