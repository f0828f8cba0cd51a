#include "mink/geometry.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

using namespace mink;

namespace {

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }
bool near_pt(Point p, double x, double y, double tol = 1e-9) {
    return near(p.x, x, tol) && near(p.y, y, tol);
}

}  // namespace

TEST_CASE("point distances") {
    CHECK(near(dist_point_core({1, 2}, make_segment_core({0, 0}, {2, 0})), 2.0));
    CHECK(near(dist_point_core({-3, 4}, make_point_core({0, 0})), 5.0));
    CHECK(near(dist_point_core({3, 0}, make_segment_core({0, 0}, {2, 0})), 1.0));

    auto square = make_polygon_core({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(near(dist_point_core({0.5, 0.5}, square), 0.0));
    CHECK(near(dist_point_core({2, 0.5}, square), 1.0));
    CHECK(near(signed_dist_point_core({0.5, 0.5}, square), -0.5));
}

TEST_CASE("core validation") {
    CHECK_THROWS_AS(validate_core(ConvexCore{{}}), ValidationError);
    CHECK_THROWS_AS(validate_core(ConvexCore{{{0, 0}, {0, 0}}}), ValidationError);
    // clockwise square
    CHECK_THROWS_AS(validate_core(ConvexCore{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}),
                    ValidationError);
    // collinear vertex
    CHECK_THROWS_AS(validate_core(ConvexCore{{{0, 0}, {1, 0}, {2, 0}, {1, 1}}}),
                    ValidationError);
    // reflex quad
    CHECK_THROWS_AS(
        validate_core(ConvexCore{{{0, 0}, {2, 0}, {0.1, 0.1}, {0, 2}}}),
        ValidationError);
    CHECK_NOTHROW(validate_core(ConvexCore{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}));
    CHECK_THROWS_AS(offset(make_point_core({0, 0}), -1.0), ValidationError);
}

TEST_CASE("segment offset boundary") {
    auto shape = offset(make_segment_core({0, 0}, {2, 0}), 0.5);
    auto curves = boundary(shape);
    REQUIRE(curves.size() == 4);
    CHECK(curves[0].kind == CurveKind::edge);
    CHECK(curves[1].kind == CurveKind::arc);
    CHECK(curves[2].kind == CurveKind::edge);
    CHECK(curves[3].kind == CurveKind::arc);
    CHECK(near_pt(curves[0].a, 0.0, -0.5));
    CHECK(near_pt(curves[0].b, 2.0, -0.5));
    CHECK(near_pt(curves[1].center, 2.0, 0.0));
    CHECK(near(curves[1].angle_extent, M_PI));
    CHECK(near_pt(curves[2].a, 2.0, 0.5));
    CHECK(near_pt(curves[2].b, 0.0, 0.5));
    CHECK(near_pt(curves[3].center, 0.0, 0.0));

    double perimeter = 0.0;
    for (const auto& c : curves) perimeter += curve_length(c);
    CHECK(near(perimeter, 4.0 + M_PI));

    // the loop chains end to start
    for (std::size_t i = 0; i < curves.size(); ++i) {
        Point end = curve_point_at(curves[i], 1.0);
        Point start = curves[(i + 1) % curves.size()].kind == CurveKind::edge
                          ? curves[(i + 1) % curves.size()].a
                          : curve_point_at(curves[(i + 1) % curves.size()], 0.0);
        CHECK(near(dist(end, start), 0.0, 1e-12));
    }
}

TEST_CASE("disk and polygon boundaries") {
    auto disk = offset(make_point_core({1, 1}), 2.0);
    auto dc = boundary(disk);
    REQUIRE(dc.size() == 1);
    CHECK(dc[0].kind == CurveKind::arc);
    CHECK(near(curve_length(dc[0]), 2.0 * M_PI * 2.0));

    auto square = offset(make_polygon_core({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 0.25);
    auto sc = boundary(square);
    REQUIRE(sc.size() == 8);
    double perimeter = 0.0;
    int arcs = 0;
    for (const auto& c : sc) {
        perimeter += curve_length(c);
        if (c.kind == CurveKind::arc) {
            ++arcs;
            CHECK(near(c.angle_extent, M_PI / 2.0));
        }
    }
    CHECK(arcs == 4);
    CHECK(near(perimeter, 4.0 + 2.0 * M_PI * 0.25));
}

TEST_CASE("containment modes and the boundary band") {
    auto disk = offset(make_point_core({0, 0}), 5.0);
    CHECK(contains(disk, {3, 4}, Containment::closed));
    CHECK_FALSE(contains(disk, {3, 4}, Containment::open));  // exactly on the rim
    CHECK(contains(disk, {3, 3.9}, Containment::open));
    CHECK_FALSE(contains(disk, {3.1, 4}, Containment::closed));

    // zero radius degenerates to the core itself
    auto square = make_polygon_core({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto flat = offset(square, 0.0);
    CHECK(contains(flat, {0.5, 0.5}, Containment::open));
    CHECK(contains(flat, {0.5, 0.5}, Containment::closed));
    CHECK(contains(flat, {1.0, 0.5}, Containment::closed));
    CHECK_FALSE(contains(flat, {1.0, 0.5}, Containment::open));
    CHECK_FALSE(contains(flat, {1.1, 0.5}, Containment::closed));

    auto needle = offset(make_segment_core({0, 0}, {1, 0}), 0.0);
    CHECK(contains(needle, {0.5, 0.0}, Containment::closed));
    CHECK_FALSE(contains(needle, {0.5, 0.0}, Containment::open));
}

TEST_CASE("open implies closed on random probes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto core = make_polygon_core({{0, 0}, {2, 0}, {2.5, 1}, {1, 2}, {-0.5, 0.8}});
    for (double r : {0.0, 0.3, 1.7}) {
        auto shape = offset(core, r);
        for (int i = 0; i < 2000; ++i) {
            Point q{u(rng), u(rng)};
            if (contains(shape, q, Containment::open))
                CHECK(contains(shape, q, Containment::closed));
            bool closed = contains(shape, q, Containment::closed);
            bool by_dist = dist_point_core(q, core) <= r + kEpsGeom;
            if (signed_dist_point_core(q, core) >= 0.0) CHECK(closed == by_dist);
        }
    }
}

TEST_CASE("two unit circles meet at the classic pair") {
    auto s1 = offset(make_point_core({0, 0}), 1.0);
    auto s2 = offset(make_point_core({1, 0}), 1.0);
    auto hits = boundary_intersections(s1, s2);
    REQUIRE(hits.size() == 2);
    double root3_2 = std::sqrt(3.0) / 2.0;
    CHECK(hits[0].cls == IntersectionClass::cc);
    CHECK(hits[1].cls == IntersectionClass::cc);
    CHECK(near_pt(hits[0].p, 0.5, -root3_2, 1e-9));
    CHECK(near_pt(hits[1].p, 0.5, root3_2, 1e-9));
}

TEST_CASE("perpendicular racetracks cross edge to edge") {
    auto h = offset(make_segment_core({-1, 0}, {1, 0}), 0.3);
    auto v = offset(make_segment_core({0, -1}, {0, 1}), 0.3);
    auto hits = boundary_intersections(h, v);
    REQUIRE(hits.size() == 4);
    for (const auto& it : hits) {
        CHECK(it.cls == IntersectionClass::rr);
        CHECK(near(std::abs(it.p.x), 0.3));
        CHECK(near(std::abs(it.p.y), 0.3));
    }
}

TEST_CASE("far apart shapes do not intersect") {
    auto s1 = offset(make_segment_core({0, 0}, {1, 0}), 0.2);
    auto s2 = offset(make_segment_core({10, 10}, {11, 10}), 0.2);
    CHECK(boundary_intersections(s1, s2).empty());

    // nested: small disk strictly inside a big one
    auto big = offset(make_point_core({0, 0}), 5.0);
    auto small = offset(make_point_core({1, 0}), 1.0);
    CHECK(boundary_intersections(big, small).empty());
}

TEST_CASE("tangency is rejected as degenerate") {
    auto s1 = offset(make_point_core({0, 0}), 1.0);
    auto s2 = offset(make_point_core({2, 0}), 1.0);  // external tangency
    CHECK_THROWS_AS(boundary_intersections(s1, s2), DegenerateInputError);

    auto s3 = offset(make_point_core({0, 0}), 2.0);
    auto s4 = offset(make_point_core({1, 0}), 1.0);  // internal tangency
    CHECK_THROWS_AS(boundary_intersections(s3, s4), DegenerateInputError);

    // two identical radius-0.5 racetracks sharing a straight edge
    auto s5 = offset(make_segment_core({0, 0}, {2, 0}), 0.5);
    auto s6 = offset(make_segment_core({0, 1}, {2, 1}), 0.5);
    CHECK_THROWS_AS(boundary_intersections(s5, s6), DegenerateInputError);

    // a circle grazing a straight edge
    auto slab = offset(make_segment_core({-2, 0}, {2, 0}), 0.5);
    auto kiss = offset(make_point_core({0, 1.5}), 1.0);
    CHECK_THROWS_AS(boundary_intersections(slab, kiss), DegenerateInputError);
}

TEST_CASE("intersection points sit on both boundaries and inside neither") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.2, 0.9);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        auto c1 = make_segment_core({u(rng), u(rng)}, {u(rng) + 1.2, u(rng)});
        auto c2 = make_segment_core({u(rng), u(rng)}, {u(rng), u(rng) + 1.2});
        auto s1 = offset(c1, ur(rng));
        auto s2 = offset(c2, ur(rng));
        std::vector<CurveIntersection> hits;
        try {
            hits = boundary_intersections(s1, s2);
        } catch (const DegenerateInputError&) {
            continue;
        }
        for (const auto& h : hits) {
            ++checked;
            CHECK(near(dist_point_core(h.p, c1), s1.radius, 1e-7));
            CHECK(near(dist_point_core(h.p, c2), s2.radius, 1e-7));
            CHECK_FALSE(contains(s1, h.p, Containment::open));
            CHECK_FALSE(contains(s2, h.p, Containment::open));
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("equal radii over disjoint cores cross at most twice") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    for (int it = 0; it < 600; ++it) {
        double r = 0.2 + 0.5 * (it % 7) / 7.0;
        Segment g1{{u(rng), u(rng)}, {u(rng), u(rng)}};
        Segment g2{{u(rng), u(rng)}, {u(rng), u(rng)}};
        if (dist_segment_segment(g1, g2) < 1e-3) continue;  // cores must be disjoint
        try {
            auto s1 = offset(make_segment_core(g1.a, g1.b), r);
            auto s2 = offset(make_segment_core(g2.a, g2.b), r);
            auto hits = boundary_intersections(s1, s2);
            CHECK(hits.size() <= 2);
            ++checked;
        } catch (const ValidationError&) {
            continue;  // degenerate random segment
        } catch (const DegenerateInputError&) {
            continue;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("crossing count agrees with a dense boundary walk") {
    auto s1 = offset(make_segment_core({-0.8, -0.1}, {0.9, 0.2}), 0.45);
    auto s2 = offset(make_segment_core({-0.2, -0.9}, {0.1, 0.8}), 0.4);
    auto hits = boundary_intersections(s1, s2);
    auto walked = oracle::union_vertices_by_walking({s1, s2}, 20000);
    // with just two shapes every crossing lies on the union boundary, and the
    // walk adds the exposed junction points of both shapes
    std::size_t junctions = 0;
    for (const auto& s : {s1, s2})
        for (const auto& c : boundary(s))
            if (!contains(s1, c.a, Containment::open) &&
                !contains(s2, c.a, Containment::open))
                ++junctions;
    CHECK(walked.size() == hits.size() + junctions);

    for (const auto& h : hits) {
        double best = 1e9;
        for (Point p : walked) best = std::min(best, dist(p, h.p));
        CHECK(best <= 1e-7);
    }
}
