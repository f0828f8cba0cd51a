#pragma once

#include <cstddef>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

// number of shapes strictly containing q
int depth(const std::vector<OffsetShape>& shapes, const Point& q,
          double eps = kEpsGeom);

struct DepthReport {
    int value = 0;
    Point witness;  // a point attaining the maximum
};

// Exact maximum of the depth function. Candidates are the four quadrant
// probes around every pairwise boundary crossing plus one interior witness
// per shape; a face of maximal depth either carries a crossing on its rim or
// is the undivided interior of its innermost shape, so these suffice.
DepthReport max_depth(const std::vector<OffsetShape>& shapes,
                      double eps = kEpsGeom, double probe_eps = 1e-6);

// crossings of the boundary arrangement lying at level <= k, the level being
// the number of shapes other than the two owners strictly covering the point
std::size_t shallow_vertex_count(const std::vector<OffsetShape>& shapes, int k,
                                 double eps = kEpsGeom);

}  // namespace mink
