"""Union structure, cover depth and vulnerability scoring for disk-grown
convex sites.

Cores are plain vertex lists: one point, two segment endpoints, or a CCW
convex polygon. Radii are per-core floats.
"""

from ._minkunion import (
    DegenerateInputError,
    GenerationError,
    ValidationError,
    assign_radii,
    depth_at,
    generate,
    grid_phi_max,
    max_depth,
    most_vulnerable,
    phi_at,
    shallow_count,
    union_stats,
    union_vertex_points,
)

__all__ = [
    "DegenerateInputError",
    "GenerationError",
    "ValidationError",
    "assign_radii",
    "depth_at",
    "generate",
    "grid_phi_max",
    "max_depth",
    "most_vulnerable",
    "phi_at",
    "shallow_count",
    "union_stats",
    "union_vertex_points",
]
