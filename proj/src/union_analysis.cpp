#include "mink/union_analysis.hpp"

#include <algorithm>
#include <map>

namespace mink {

namespace {

bool exposed(const std::vector<OffsetShape>& shapes, const Point& q,
             std::size_t skip_a, std::size_t skip_b, double eps) {
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (i == skip_a || i == skip_b) continue;
        if (contains(shapes[i], q, Containment::open, eps)) return false;
    }
    return true;
}

// position of q along the edge, for ordering crossings on it
double edge_param(const BoundaryCurve& c, const Point& q) {
    Point d = c.b - c.a;
    double len2 = dot(d, d);
    if (len2 <= 0.0) return 0.0;
    return dot(q - c.a, d) / len2;
}

void mark_terminal(std::vector<UnionVertex>& verts,
                   const std::vector<std::vector<BoundaryCurve>>& boundaries) {
    // group rr crossings per straight edge; the first and the last along the
    // edge are terminal
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> per_edge;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (verts[v].kind != UnionVertexKind::crossing) continue;
        if (verts[v].cls != IntersectionClass::rr) continue;
        per_edge[{verts[v].owner_first, verts[v].curve_first}].push_back(v);
        per_edge[{verts[v].owner_second, verts[v].curve_second}].push_back(v);
    }
    for (auto& [edge, ids] : per_edge) {
        const BoundaryCurve& c = boundaries[edge.first][edge.second];
        std::sort(ids.begin(), ids.end(), [&](std::size_t l, std::size_t r) {
            return edge_param(c, verts[l].p) < edge_param(c, verts[r].p);
        });
        verts[ids.front()].terminal_rr = true;
        verts[ids.back()].terminal_rr = true;
    }
}

}  // namespace

std::vector<UnionVertex> union_vertices(const std::vector<OffsetShape>& shapes,
                                        double eps) {
    std::vector<std::vector<BoundaryCurve>> boundaries;
    boundaries.reserve(shapes.size());
    for (const auto& s : shapes) boundaries.push_back(boundary(s));

    std::vector<UnionVertex> verts;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        for (std::size_t k = i + 1; k < shapes.size(); ++k) {
            for (const auto& hit : boundary_intersections(shapes[i], shapes[k], eps)) {
                if (!exposed(shapes, hit.p, i, k, eps)) continue;
                UnionVertex v;
                v.p = hit.p;
                v.kind = UnionVertexKind::crossing;
                v.cls = hit.cls;
                v.owner_first = i;
                v.owner_second = k;
                v.curve_first = hit.curve_first;
                v.curve_second = hit.curve_second;
                verts.push_back(v);
            }
        }
    }

    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (boundaries[i].size() < 2) continue;  // full circle or bare point
        for (std::size_t c = 0; c < boundaries[i].size(); ++c) {
            const Point& q = boundaries[i][c].a;
            if (!exposed(shapes, q, i, i, eps)) continue;
            UnionVertex v;
            v.p = q;
            v.kind = UnionVertexKind::shape_vertex;
            v.owner_first = i;
            v.owner_second = i;
            v.curve_first = c == 0 ? boundaries[i].size() - 1 : c - 1;
            v.curve_second = c;
            verts.push_back(v);
        }
    }

    // duplicates can only come from near-coincident crossings of different
    // pairs; collapse anything closer than the intersector's own merge radius
    std::sort(verts.begin(), verts.end(), [](const UnionVertex& a, const UnionVertex& b) {
        if (a.p.x != b.p.x) return a.p.x < b.p.x;
        return a.p.y < b.p.y;
    });
    std::vector<UnionVertex> out;
    for (const auto& v : verts) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            if (v.p.x - it->p.x > 10.0 * eps) break;
            if (dist(v.p, it->p) <= 10.0 * eps) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(v);
    }

    mark_terminal(out, boundaries);
    return out;
}

UnionStats union_stats(const std::vector<OffsetShape>& shapes, double eps) {
    UnionStats st;
    st.n = shapes.size();
    for (const auto& v : union_vertices(shapes, eps)) {
        if (v.kind == UnionVertexKind::shape_vertex) {
            st.shape_vertices++;
        } else if (v.cls == IntersectionClass::cc) {
            st.cc++;
        } else if (v.cls == IntersectionClass::cr) {
            st.cr++;
        } else {
            st.rr++;
            if (v.terminal_rr) st.rr_terminal++;
        }
    }
    st.psi = st.cc + st.rr + st.cr + st.shape_vertices;
    return st;
}

}  // namespace mink
