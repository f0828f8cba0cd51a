#include "mink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mink {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double wrap_angle(double a) {
    // into [0, 2*pi)
    a = std::fmod(a, kTau);
    if (a < 0.0) a += kTau;
    return a;
}

// Is angle theta within the CCW sweep [start, start + extent], inflated by tol
// on both ends?
bool angle_in_arc(double theta, double start, double extent, double tol) {
    double rel = wrap_angle(theta - start);
    if (rel <= extent + tol) return true;
    return rel >= kTau - tol;  // just below the start end
}

Point right_normal(Point dir) { return {dir.y, -dir.x}; }

}  // namespace

double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p) { return std::hypot(p.x, p.y); }
double dist(Point p, Point q) { return norm(p - q); }

Point normalized(Point p) {
    double n = norm(p);
    if (n == 0.0) throw ValidationError("cannot normalize zero vector");
    return {p.x / n, p.y / n};
}

double dist_point_segment(Point q, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(q, a);
    double t = dot(q - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(q, a + t * ab);
}

double dist_segment_segment(const Segment& s, const Segment& t) {
    // Proper crossing means distance zero; otherwise the minimum is attained
    // at an endpoint against the other segment.
    Point r = s.b - s.a;
    Point d = t.b - t.a;
    double denom = cross(r, d);
    if (denom != 0.0) {
        Point w = t.a - s.a;
        double u = cross(w, d) / denom;
        double v = cross(w, r) / denom;
        if (u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0) return 0.0;
    }
    double best = dist_point_segment(s.a, t.a, t.b);
    best = std::min(best, dist_point_segment(s.b, t.a, t.b));
    best = std::min(best, dist_point_segment(t.a, s.a, s.b));
    best = std::min(best, dist_point_segment(t.b, s.a, s.b));
    return best;
}

ConvexCore make_point_core(Point p) { return ConvexCore{{p}}; }

ConvexCore make_segment_core(Point a, Point b) { return ConvexCore{{a, b}}; }

ConvexCore make_polygon_core(std::vector<Point> vertices) {
    ConvexCore core{std::move(vertices)};
    validate_core(core);
    return core;
}

void validate_core(const ConvexCore& core, double eps) {
    const auto& v = core.vertices;
    if (v.empty()) throw ValidationError("core has no vertices");
    if (v.size() == 1) return;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t j = (i + 1) % v.size();
        if (dist(v[i], v[j]) <= eps)
            throw ValidationError("core has near-duplicate consecutive vertices");
    }
    if (v.size() == 2) return;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Point p = v[i];
        Point q = v[(i + 1) % v.size()];
        Point r = v[(i + 2) % v.size()];
        double turn = cross(q - p, r - q);
        if (turn <= eps)
            throw ValidationError(
                "polygon core must be strictly convex and counter-clockwise");
    }
}

double dist_point_core(Point q, const ConvexCore& core) {
    return std::max(signed_dist_point_core(q, core), 0.0);
}

double signed_dist_point_core(Point q, const ConvexCore& core) {
    const auto& v = core.vertices;
    if (v.size() == 1) return dist(q, v[0]);
    if (v.size() == 2) return dist_point_segment(q, v[0], v[1]);
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        Point a = v[i];
        Point b = v[(i + 1) % v.size()];
        if (cross(b - a, q - a) < 0.0) inside = false;
        best = std::min(best, dist_point_segment(q, a, b));
    }
    return inside ? -best : best;
}

OffsetShape offset(const ConvexCore& core, double radius) {
    if (radius < 0.0) throw ValidationError("offset radius must be non-negative");
    validate_core(core);
    return OffsetShape{core, radius};
}

std::vector<BoundaryCurve> boundary(const OffsetShape& shape) {
    const auto& v = shape.core.vertices;
    double r = shape.radius;
    std::vector<BoundaryCurve> out;

    if (v.size() == 1) {
        if (r <= 0.0) return out;  // a bare point has no boundary curves
        BoundaryCurve c;
        c.kind = CurveKind::arc;
        c.center = v[0];
        c.radius = r;
        c.angle_start = 0.0;
        c.angle_extent = kTau;
        c.a = c.b = v[0] + Point{r, 0.0};
        out.push_back(c);
        return out;
    }

    // Directed edge cycle: a->b, b->a for a segment; the CCW ring for a
    // polygon. Interior stays on the left, so the offset direction is the
    // right normal of each edge.
    std::vector<std::pair<Point, Point>> ring;
    if (v.size() == 2) {
        ring.push_back({v[0], v[1]});
        ring.push_back({v[1], v[0]});
    } else {
        for (std::size_t i = 0; i < v.size(); ++i)
            ring.push_back({v[i], v[(i + 1) % v.size()]});
    }

    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto [p, q] = ring[i];
        Point n = right_normal(normalized(q - p));
        BoundaryCurve edge;
        edge.kind = CurveKind::edge;
        edge.a = p + r * n;
        edge.b = q + r * n;
        out.push_back(edge);

        if (r <= 0.0) continue;  // degenerate shape: core edges only

        auto [p2, q2] = ring[(i + 1) % ring.size()];
        Point n_next = right_normal(normalized(q2 - p2));
        BoundaryCurve arc;
        arc.kind = CurveKind::arc;
        arc.center = q;
        arc.radius = r;
        arc.angle_start = std::atan2(n.y, n.x);
        arc.angle_extent = wrap_angle(std::atan2(n_next.y, n_next.x) - arc.angle_start);
        arc.a = q + r * n;
        arc.b = q + r * n_next;
        out.push_back(arc);
    }
    return out;
}

double curve_length(const BoundaryCurve& c) {
    if (c.kind == CurveKind::edge) return dist(c.a, c.b);
    return c.radius * c.angle_extent;
}

Point curve_point_at(const BoundaryCurve& c, double t) {
    if (c.kind == CurveKind::edge) return c.a + t * (c.b - c.a);
    double ang = c.angle_start + t * c.angle_extent;
    return c.center + Point{c.radius * std::cos(ang), c.radius * std::sin(ang)};
}

Point curve_outward_normal_at(const BoundaryCurve& c, double t) {
    if (c.kind == CurveKind::edge) return right_normal(normalized(c.b - c.a));
    double ang = c.angle_start + t * c.angle_extent;
    return {std::cos(ang), std::sin(ang)};
}

Point curve_outward_normal_at(const BoundaryCurve& c, const Point& p_on_curve) {
    if (c.kind == CurveKind::edge) return right_normal(normalized(c.b - c.a));
    return normalized(p_on_curve - c.center);
}

bool contains(const OffsetShape& shape, Point q, Containment mode, double eps) {
    double sd = signed_dist_point_core(q, shape.core);
    if (mode == Containment::open) return sd < shape.radius - eps;
    return sd <= shape.radius + eps;
}

namespace {

struct RawHit {
    Point p;
    IntersectionClass cls;
    std::size_t ci, cj;
};

void edge_edge_hits(const BoundaryCurve& e1, const BoundaryCurve& e2, double eps,
                    std::vector<Point>& pts) {
    Point r = e1.b - e1.a;
    Point d = e2.b - e2.a;
    double len1 = norm(r);
    double len2 = norm(d);
    if (len1 == 0.0 || len2 == 0.0) return;
    double denom = cross(r, d);
    Point w = e2.a - e1.a;
    if (std::abs(denom) <= 1e-12 * len1 * len2) {
        // near-parallel: contact within tolerance is a glancing/overlapping
        // configuration the closed-form solve cannot resolve
        if (dist_segment_segment({e1.a, e1.b}, {e2.a, e2.b}) <= eps)
            throw DegenerateInputError("overlapping near-parallel edges");
        return;
    }
    double u = cross(w, d) / denom;
    double v = cross(w, r) / denom;
    double tol1 = eps / len1;
    double tol2 = eps / len2;
    if (u < -tol1 || u > 1.0 + tol1 || v < -tol2 || v > 1.0 + tol2) return;
    pts.push_back(e1.a + u * r);
}

void arc_edge_hits(const BoundaryCurve& arc, const BoundaryCurve& edge, double eps,
                   std::vector<Point>& pts) {
    Point d = edge.b - edge.a;
    double len = norm(d);
    if (len == 0.0) return;
    Point u = {d.x / len, d.y / len};
    Point w = arc.center - edge.a;
    double along = dot(w, u);           // center projected onto the edge line
    double lateral = cross(u, w);       // signed distance line -> center
    double h = std::abs(lateral);
    double r = arc.radius;
    if (h > r + eps) return;
    double angular_tol = eps / std::max(r, eps);
    if (std::abs(h - r) <= eps) {
        // tangential contact; degenerate only if it happens on both curves
        double t = along / len;
        if (t >= -eps / len && t <= 1.0 + eps / len) {
            Point foot = edge.a + along * u;
            double theta = std::atan2(foot.y - arc.center.y, foot.x - arc.center.x);
            if (angle_in_arc(theta, arc.angle_start, arc.angle_extent, angular_tol))
                throw DegenerateInputError("edge tangent to arc");
        }
        return;
    }
    double half = std::sqrt(std::max(r * r - h * h, 0.0));
    for (double s : {along - half, along + half}) {
        double t = s / len;
        if (t < -eps / len || t > 1.0 + eps / len) continue;
        Point p = edge.a + s * u;
        double theta = std::atan2(p.y - arc.center.y, p.x - arc.center.x);
        if (!angle_in_arc(theta, arc.angle_start, arc.angle_extent, angular_tol)) continue;
        pts.push_back(p);
    }
}

void arc_arc_hits(const BoundaryCurve& a1, const BoundaryCurve& a2, double eps,
                  std::vector<Point>& pts) {
    double r1 = a1.radius;
    double r2 = a2.radius;
    Point c12 = a2.center - a1.center;
    double d = norm(c12);
    if (d <= eps) {
        if (std::abs(r1 - r2) <= eps) {
            // same supporting circle: any angular overlap carries a whole
            // shared sub-arc
            double tol1 = eps / std::max(r1, eps);
            if (angle_in_arc(a2.angle_start, a1.angle_start, a1.angle_extent, tol1) ||
                angle_in_arc(a1.angle_start, a2.angle_start, a2.angle_extent, tol1))
                throw DegenerateInputError("coincident arcs");
        }
        return;  // concentric circles of different radii never meet
    }
    if (d > r1 + r2 + eps) return;
    if (d < std::abs(r1 - r2) - eps) return;

    double tol1 = eps / std::max(r1, eps);
    double tol2 = eps / std::max(r2, eps);
    bool tangent = std::abs(d - (r1 + r2)) <= eps || std::abs(d - std::abs(r1 - r2)) <= eps;
    double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double h2 = r1 * r1 - a * a;
    double h = std::sqrt(std::max(h2, 0.0));
    Point u = {c12.x / d, c12.y / d};
    Point mid = a1.center + a * u;
    Point perp = {-u.y, u.x};

    if (tangent) {
        Point p = mid;  // contact point up to O(eps)
        double th1 = std::atan2(p.y - a1.center.y, p.x - a1.center.x);
        double th2 = std::atan2(p.y - a2.center.y, p.x - a2.center.x);
        if (angle_in_arc(th1, a1.angle_start, a1.angle_extent, tol1) &&
            angle_in_arc(th2, a2.angle_start, a2.angle_extent, tol2))
            throw DegenerateInputError("tangent arcs");
        return;
    }

    for (Point p : {mid + h * perp, mid - h * perp}) {
        double th1 = std::atan2(p.y - a1.center.y, p.x - a1.center.x);
        double th2 = std::atan2(p.y - a2.center.y, p.x - a2.center.x);
        if (!angle_in_arc(th1, a1.angle_start, a1.angle_extent, tol1)) continue;
        if (!angle_in_arc(th2, a2.angle_start, a2.angle_extent, tol2)) continue;
        pts.push_back(p);
        if (h <= eps) break;  // the two roots coincide
    }
}

}  // namespace

std::vector<CurveIntersection> boundary_intersections(const OffsetShape& s1,
                                                      const OffsetShape& s2,
                                                      double eps) {
    return boundary_intersections(boundary(s1), boundary(s2), eps);
}

std::vector<CurveIntersection> boundary_intersections(
    const std::vector<BoundaryCurve>& b1, const std::vector<BoundaryCurve>& b2,
    double eps) {
    std::vector<RawHit> hits;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < b1.size(); ++i) {
        for (std::size_t j = 0; j < b2.size(); ++j) {
            const auto& c1 = b1[i];
            const auto& c2 = b2[j];
            pts.clear();
            IntersectionClass cls;
            if (c1.kind == CurveKind::edge && c2.kind == CurveKind::edge) {
                cls = IntersectionClass::rr;
                edge_edge_hits(c1, c2, eps, pts);
            } else if (c1.kind == CurveKind::arc && c2.kind == CurveKind::arc) {
                cls = IntersectionClass::cc;
                arc_arc_hits(c1, c2, eps, pts);
            } else {
                cls = IntersectionClass::cr;
                if (c1.kind == CurveKind::arc)
                    arc_edge_hits(c1, c2, eps, pts);
                else
                    arc_edge_hits(c2, c1, eps, pts);
            }
            for (Point p : pts) hits.push_back({p, cls, i, j});
        }
    }

    // Deduplicate coincident points (a crossing at a curve junction is seen by
    // both adjacent curves); keep the lexicographically first representative.
    std::sort(hits.begin(), hits.end(), [](const RawHit& l, const RawHit& r) {
        if (l.p.x != r.p.x) return l.p.x < r.p.x;
        if (l.p.y != r.p.y) return l.p.y < r.p.y;
        if (l.ci != r.ci) return l.ci < r.ci;
        return l.cj < r.cj;
    });
    std::vector<CurveIntersection> out;
    for (const auto& h : hits) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            if (h.p.x - it->p.x > 10.0 * eps) break;
            if (dist(h.p, it->p) <= 10.0 * eps) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back({h.p, h.cls, h.ci, h.cj});
    }
    return out;
}

}  // namespace mink
