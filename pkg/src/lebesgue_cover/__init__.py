"""Universal covers for unit-diameter planar sets.

Constructs the slanted hexagon cover family (cut hexagon, its Sprague-style
unit-arc reductions, and the reflection reductions near corners A and E),
computes areas to ten significant digits, minimizes over the slant angle,
and numerically verifies that constant-width bodies fit inside the covers.
"""

from .geometry import (BoundaryChain, CircArc, Isometry, LineSeg, Point,
                       Polyline, apply_isometry, chain_area,
                       chain_from_dict, chain_to_dict,
                       circle_circle_intersection, circle_line_intersection,
                       convexity_check, foot_of_perpendicular, point_in_chain)
from .cover import (CoverStage, Landmarks, SlantAngle, build_cover,
                    build_hexagon, build_pal, build_region_AH,
                    build_region_EH, build_S, build_sprague_regions,
                    compute_theta_tau, construction, corner_region,
                    full_landmarks, invert_X, point_L, point_N, point_X)
from .optimize import MinResult, SweepRow, area_of, minimize, sweep
from .orbiform import Orbiform, ReuleauxPolygon, SupportBody, reuleaux_polygon, support_body
from .fitting import FitResult, check_case_lemmas, fit, run_verification

__all__ = [
    "BoundaryChain", "CircArc", "Isometry", "LineSeg", "Point", "Polyline",
    "apply_isometry", "chain_area", "chain_from_dict", "chain_to_dict",
    "circle_circle_intersection", "circle_line_intersection",
    "convexity_check", "foot_of_perpendicular", "point_in_chain",
    "CoverStage", "Landmarks", "SlantAngle", "build_cover", "build_hexagon",
    "build_pal", "build_region_AH", "build_region_EH", "build_S",
    "build_sprague_regions", "compute_theta_tau", "construction",
    "corner_region", "full_landmarks", "invert_X", "point_L", "point_N",
    "point_X", "MinResult", "SweepRow", "area_of", "minimize", "sweep",
    "Orbiform", "ReuleauxPolygon", "SupportBody", "reuleaux_polygon",
    "support_body", "FitResult", "check_case_lemmas", "fit",
    "run_verification",
]
