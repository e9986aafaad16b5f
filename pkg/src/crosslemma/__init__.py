"""Topological multigraph drawings with exact crossings, drawing styles,
proof transforms, bisection and decomposition, and crossing lower bounds."""
from .bounds import (BoundReport, alpha, beta, bound_holds, bound_report, crossing_lower_bound,
                     verify_crossing_lemma, verify_edge_bounds, x_of_b)
from .constructions import (ConstructionSpec, build, convex_complete, empty_lens_gadget,
                            even_cycle, random_planar_drawing, random_polyline_drawing,
                            separated_arc_construction)
from .decomposition import (Bipartition, DecompositionTrace, bisection_heuristic,
                            bisection_width_oracle, check_bisection_inequality, decompose)
from .drawing import (Crossing, Drawing, Edge, Lens, LensKind, crossing_number, crossings,
                      empty_lenses, lenses, validate_general_position)
from .errors import (ClearanceViolation, CrossLemmaError, DomainError, GenerationFailed,
                     GeometryError, InvalidDrawing, InvariantViolation, IterationLimitExceeded,
                     MissingParameter, NoFeasibleBipartition, NonContiguousGroups, NotClosed,
                     NotParallel, NotSimple, ParseError, ResolutionTooCoarse,
                     StyleViolation, TooLargeForOracle, UnknownEdge, UnknownVertex)
from .geometry import Point, point, segment_intersection
from .io import parse_drawing, render_svg, serialize_drawing
from .styles import StyleParams, check_style, girth, is_separated, style_params
from .transforms import (SplitPlan, planarize, remove_edges, reroute_empty_lens_step,
                         reroute_to_fixpoint, split_high_degree, vertex_split)

__version__ = "0.1.0"


__all__ = [
    "Bipartition",
    "BoundReport",
    "ClearanceViolation",
    "ConstructionSpec",
    "CrossLemmaError",
    "Crossing",
    "DecompositionTrace",
    "DomainError",
    "Drawing",
    "Edge",
    "GenerationFailed",
    "GeometryError",
    "InvalidDrawing",
    "InvariantViolation",
    "IterationLimitExceeded",
    "Lens",
    "LensKind",
    "MissingParameter",
    "NoFeasibleBipartition",
    "NonContiguousGroups",
    "NotClosed",
    "NotParallel",
    "NotSimple",
    "ParseError",
    "Point",
    "ResolutionTooCoarse",
    "SplitPlan",
    "StyleParams",
    "StyleViolation",
    "TooLargeForOracle",
    "UnknownEdge",
    "UnknownVertex",
    "alpha",
    "beta",
    "bisection_heuristic",
    "bisection_width_oracle",
    "bound_holds",
    "bound_report",
    "build",
    "check_bisection_inequality",
    "check_style",
    "convex_complete",
    "crossing_lower_bound",
    "crossing_number",
    "crossings",
    "decompose",
    "empty_lens_gadget",
    "empty_lenses",
    "even_cycle",
    "girth",
    "is_separated",
    "lenses",
    "parse_drawing",
    "planarize",
    "point",
    "random_planar_drawing",
    "random_polyline_drawing",
    "remove_edges",
    "render_svg",
    "reroute_empty_lens_step",
    "reroute_to_fixpoint",
    "segment_intersection",
    "separated_arc_construction",
    "serialize_drawing",
    "split_high_degree",
    "style_params",
    "validate_general_position",
    "verify_crossing_lemma",
    "verify_edge_bounds",
    "vertex_split",
    "x_of_b",
]
