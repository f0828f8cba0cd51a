#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mink {

// Default absolute tolerance for on-boundary decisions. Callers can override
// per call; everything downstream inherits this default.
inline constexpr double kEpsGeom = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double dot(Point p, Point q);
double cross(Point p, Point q);
double norm(Point p);
double dist(Point p, Point q);
Point normalized(Point p);

struct Segment {
    Point a;
    Point b;
};

double dist_point_segment(Point q, Point a, Point b);
double dist_segment_segment(const Segment& s, const Segment& t);

// Generator of an expanded shape. One vertex is a point, two make a segment,
// three or more a strictly convex polygon in counter-clockwise order.
struct ConvexCore {
    std::vector<Point> vertices;
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when curves touch tangentially (or overlap) within tolerance. The
// caller is expected to perturb the input and retry.
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

ConvexCore make_point_core(Point p);
ConvexCore make_segment_core(Point a, Point b);
ConvexCore make_polygon_core(std::vector<Point> vertices);

// Throws ValidationError unless the core is a point, a proper segment, or a
// strictly convex CCW polygon with no near-duplicate vertices.
void validate_core(const ConvexCore& core, double eps = kEpsGeom);

// Euclidean distance to the core as a closed set (zero inside a polygon).
double dist_point_core(Point q, const ConvexCore& core);

// Same, but negative strictly inside a polygon core. Equals dist_point_core
// for point and segment cores.
double signed_dist_point_core(Point q, const ConvexCore& core);

// The core grown by a disk of the given radius.
struct OffsetShape {
    ConvexCore core;
    double radius = 0.0;
};

OffsetShape offset(const ConvexCore& core, double radius);

enum class CurveKind { edge, arc };

// One boundary piece of an OffsetShape. Edges run a -> b with the interior on
// the left. Arcs sweep counter-clockwise from angle_start by angle_extent > 0
// around center.
struct BoundaryCurve {
    CurveKind kind = CurveKind::edge;
    Point a;
    Point b;
    Point center;
    double radius = 0.0;
    double angle_start = 0.0;
    double angle_extent = 0.0;
};

// Boundary pieces in counter-clockwise order: edge, arc, edge, arc, ... for a
// segment core (the straight sides and end caps), one full circle for a point
// core, and s edges alternating with s vertex arcs for a polygon core. With
// radius zero the arcs collapse and only the core edges remain.
std::vector<BoundaryCurve> boundary(const OffsetShape& shape);

double curve_length(const BoundaryCurve& c);
Point curve_point_at(const BoundaryCurve& c, double t);    // t in [0, 1]
Point curve_outward_normal_at(const BoundaryCurve& c, double t);
Point curve_outward_normal_at(const BoundaryCurve& c, const Point& p_on_curve);

enum class Containment { open, closed };

// Open containment is strict interior membership, closed includes the
// boundary. Points within eps of the boundary count as closed-only.
bool contains(const OffsetShape& shape, Point q, Containment mode,
              double eps = kEpsGeom);

enum class IntersectionClass { rr, cr, cc };  // edge/edge, arc/edge, arc/arc

struct CurveIntersection {
    Point p;
    IntersectionClass cls = IntersectionClass::rr;
    std::size_t curve_first = 0;   // index into boundary(first shape)
    std::size_t curve_second = 0;  // index into boundary(second shape)
};

// All transversal boundary crossing points of the two shapes, deduplicated
// within 10*eps with lexicographic tie-breaking. Tangential contact within
// eps raises DegenerateInputError.
std::vector<CurveIntersection> boundary_intersections(const OffsetShape& s1,
                                                      const OffsetShape& s2,
                                                      double eps = kEpsGeom);
// same, over boundaries the caller already holds
std::vector<CurveIntersection> boundary_intersections(
    const std::vector<BoundaryCurve>& b1, const std::vector<BoundaryCurve>& b2,
    double eps = kEpsGeom);

}  // namespace mink
