#include "mink/depth.hpp"

#include <cmath>

namespace mink {

namespace {

Point core_witness(const ConvexCore& core) {
    Point acc{0.0, 0.0};
    for (const auto& v : core.vertices) acc = acc + v;
    return (1.0 / static_cast<double>(core.vertices.size())) * acc;
}

}  // namespace

int depth(const std::vector<OffsetShape>& shapes, const Point& q, double eps) {
    int d = 0;
    for (const auto& s : shapes)
        if (contains(s, q, Containment::open, eps)) ++d;
    return d;
}

DepthReport max_depth(const std::vector<OffsetShape>& shapes, double eps,
                      double probe_eps) {
    DepthReport best;
    if (shapes.empty()) return best;

    best.witness = core_witness(shapes[0].core);
    best.value = depth(shapes, best.witness, eps);
    for (const auto& s : shapes) {
        Point w = core_witness(s.core);
        int d = depth(shapes, w, eps);
        if (d > best.value) best = {d, w};
    }

    std::vector<std::vector<BoundaryCurve>> boundaries;
    boundaries.reserve(shapes.size());
    for (const auto& s : shapes) boundaries.push_back(boundary(s));

    for (std::size_t i = 0; i < shapes.size(); ++i) {
        for (std::size_t k = i + 1; k < shapes.size(); ++k) {
            for (const auto& hit : boundary_intersections(shapes[i], shapes[k], eps)) {
                Point n1 = curve_outward_normal_at(boundaries[i][hit.curve_first], hit.p);
                Point n2 = curve_outward_normal_at(boundaries[k][hit.curve_second], hit.p);
                for (double s1 : {-1.0, 1.0}) {
                    for (double s2 : {-1.0, 1.0}) {
                        Point v{s1 * n1.x + s2 * n2.x, s1 * n1.y + s2 * n2.y};
                        double len = norm(v);
                        if (len < 1e-9) continue;  // near-tangential, other probes cover
                        Point q = hit.p + (probe_eps / len) * v;
                        int d = depth(shapes, q, eps);
                        if (d > best.value) best = {d, q};
                    }
                }
            }
        }
    }
    return best;
}

std::size_t shallow_vertex_count(const std::vector<OffsetShape>& shapes, int k,
                                 double eps) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        for (std::size_t j = i + 1; j < shapes.size(); ++j) {
            for (const auto& hit : boundary_intersections(shapes[i], shapes[j], eps)) {
                int level = 0;
                for (std::size_t m = 0; m < shapes.size(); ++m) {
                    if (m == i || m == j) continue;
                    if (contains(shapes[m], hit.p, Containment::open, eps)) ++level;
                    if (level > k) break;
                }
                if (level <= k) ++count;
            }
        }
    }
    return count;
}

}  // namespace mink
