"""Exact radii of planar convex bodies and the full shape diagram.

The package computes the inradius r, width w, diameter D and circumradius R
of convex bodies bounded by segments and circular arcs, together with
optimality certificates, and implements the complete boundary structure of
the set of attainable triples (r/R, w/2R, D/2R): nine inequalities, ten
extreme shapes, and the families of bodies filling every edge and facet.
"""

from .geometry import (
    Arc,
    ArcPolygon,
    GeometryError,
    Segment,
    body_from_dict,
    body_from_points,
    body_to_dict,
    clip_halfplane,
    disk,
    hull_points_disks,
    load_body,
    minkowski_sum,
    scale,
    segment_body,
    support,
    translate,
    validate,
)
from .radii import RadiiResult, compute_radii, verify_certificates

__all__ = [
    "Arc",
    "ArcPolygon",
    "GeometryError",
    "RadiiResult",
    "Segment",
    "body_from_dict",
    "body_from_points",
    "body_to_dict",
    "clip_halfplane",
    "compute_radii",
    "disk",
    "hull_points_disks",
    "load_body",
    "minkowski_sum",
    "scale",
    "segment_body",
    "support",
    "translate",
    "validate",
    "verify_certificates",
]

__version__ = "0.1.0"
