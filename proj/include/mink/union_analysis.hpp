#pragma once

#include <cstddef>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

// A vertex of the union boundary: either a crossing of two shape boundaries
// or a vertex of a single shape (edge/arc junction) that survives on the
// outer boundary.
enum class UnionVertexKind { crossing, shape_vertex };

struct UnionVertex {
    Point p;
    UnionVertexKind kind = UnionVertexKind::crossing;
    IntersectionClass cls = IntersectionClass::rr;  // crossings only
    std::size_t owner_first = 0;   // shape indices; equal for shape vertices
    std::size_t owner_second = 0;
    std::size_t curve_first = 0;
    std::size_t curve_second = 0;
    bool terminal_rr = false;  // first or last crossing along one of its edges
};

struct UnionStats {
    std::size_t n = 0;
    std::size_t cc = 0;
    std::size_t rr = 0;
    std::size_t cr = 0;
    std::size_t shape_vertices = 0;
    std::size_t rr_terminal = 0;
    std::size_t psi = 0;  // cc + rr + cr + shape_vertices
};

// All union boundary vertices by brute force: every pairwise boundary
// crossing kept when no third shape strictly covers it, plus every shape
// vertex not strictly inside another shape. Throws DegenerateInputError on
// tangential contact, as the pairwise intersector does.
std::vector<UnionVertex> union_vertices(const std::vector<OffsetShape>& shapes,
                                        double eps = kEpsGeom);

UnionStats union_stats(const std::vector<OffsetShape>& shapes, double eps = kEpsGeom);

}  // namespace mink
