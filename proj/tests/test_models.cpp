#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "mink/models.hpp"
#include "oracle.hpp"

using namespace mink;

TEST_CASE("permutation model preserves the radius multiset") {
    PermutationModel pm;
    pm.theta = {0.5, 1.5, 1.5, 2.0, 7.0};
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        auto radii = assign_radii(RadiiModel{pm}, 5, rng);
        auto sorted = radii;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<double>{0.5, 1.5, 1.5, 2.0, 7.0});
    }
    CHECK_THROWS_AS(assign_radii(RadiiModel{pm}, 4, rng), GenerationError);
}

TEST_CASE("permutation model draws orderings uniformly") {
    PermutationModel pm;
    pm.theta = {1.0, 2.0, 3.0};
    Rng rng(7);
    std::map<int, int> counts;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        auto r = assign_radii(RadiiModel{pm}, 3, rng);
        int code = static_cast<int>(r[0]) * 100 + static_cast<int>(r[1]) * 10 +
                   static_cast<int>(r[2]);
        counts[code]++;
    }
    CHECK(counts.size() == 6);
    for (const auto& [code, c] : counts) {
        double freq = static_cast<double>(c) / trials;
        CHECK(freq == doctest::Approx(1.0 / 6.0).epsilon(0.12));  // 1/6 +- 0.02
    }
}

TEST_CASE("density draws land where the distribution says") {
    Rng rng(11);
    auto uni = DistributionSpec::make_uniform(0.2, 0.9);
    double mean = 0.0;
    for (int i = 0; i < 4000; ++i) {
        double x = sample(uni, rng);
        CHECK(x >= 0.2);
        CHECK(x < 0.9);
        mean += x;
    }
    CHECK(mean / 4000 == doctest::Approx(0.55).epsilon(0.03));

    auto expo = DistributionSpec::make_exponential(2.0);
    mean = 0.0;
    for (int i = 0; i < 4000; ++i) {
        double x = sample(expo, rng);
        CHECK(x > 0.0);
        mean += x;
    }
    CHECK(mean / 4000 == doctest::Approx(0.5).epsilon(0.1));

    auto disc = DistributionSpec::make_discrete({1.0, 4.0}, {3.0, 1.0});
    int ones = 0;
    for (int i = 0; i < 4000; ++i) {
        double x = sample(disc, rng);
        CHECK((x == 1.0 || x == 4.0));
        if (x == 1.0) ones++;
    }
    CHECK(static_cast<double>(ones) / 4000 == doctest::Approx(0.75).epsilon(0.05));

    auto gauss = DistributionSpec::make_truncated_gaussian(1.0, 0.5, 0.8);
    for (int i = 0; i < 2000; ++i) CHECK(sample(gauss, rng) >= 0.8);
}

TEST_CASE("density model radii are reproducible per seed") {
    DensityModel dm{DistributionSpec::make_uniform(0.1, 0.3)};
    Rng a(99), b(99), c(100);
    auto ra = assign_radii(RadiiModel{dm}, 16, a);
    auto rb = assign_radii(RadiiModel{dm}, 16, b);
    auto rc = assign_radii(RadiiModel{dm}, 16, c);
    CHECK(ra == rb);
    CHECK(ra != rc);
}

TEST_CASE("segment generator yields disjoint in-region cores, deterministically") {
    Box region{0.0, 0.0, 1.0, 1.0};
    auto inst = gen_disjoint_segments(100, region, 2024, 0.1);
    REQUIRE(inst.cores.size() == 100);
    CHECK(inst.generator == "disjoint_segments");
    CHECK(inst.seed == 2024);
    double pad = 1e-6;
    for (const auto& core : inst.cores) {
        REQUIRE(core.vertices.size() == 2);
        for (const auto& p : core.vertices) {
            CHECK(p.x >= region.x0 - pad);
            CHECK(p.x <= region.x1 + pad);
            CHECK(p.y >= region.y0 - pad);
            CHECK(p.y <= region.y1 + pad);
        }
        CHECK(dist(core.vertices[0], core.vertices[1]) <= 0.1 + 1e-6);
    }
    double min_d = 1e9;
    for (std::size_t i = 0; i < inst.cores.size(); ++i)
        for (std::size_t k = i + 1; k < inst.cores.size(); ++k)
            min_d = std::min(min_d, dist_segment_segment(
                                        {inst.cores[i].vertices[0], inst.cores[i].vertices[1]},
                                        {inst.cores[k].vertices[0], inst.cores[k].vertices[1]}));
    CHECK(min_d > 1e-4);  // clearance minus jitter

    auto again = gen_disjoint_segments(100, region, 2024, 0.1);
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(inst.cores[i].vertices[0].x == again.cores[i].vertices[0].x);
        CHECK(inst.cores[i].vertices[1].y == again.cores[i].vertices[1].y);
    }
    auto other = gen_disjoint_segments(100, region, 2025, 0.1);
    CHECK(inst.cores[0].vertices[0].x != other.cores[0].vertices[0].x);
}

TEST_CASE("segment generator reports hopeless regions instead of spinning") {
    Box region{0.0, 0.0, 1.0, 1.0};
    // every candidate is longer than the diagonal, so no endpoint ever fits
    CHECK_THROWS_AS(gen_disjoint_segments(2, region, 5, 10.0), GenerationError);
    CHECK_THROWS_AS(gen_disjoint_segments(0, region, 5), GenerationError);
}

TEST_CASE("polygon generator yields disjoint strictly convex rings") {
    Box region{-1.0, -1.0, 3.0, 2.0};
    auto inst = gen_disjoint_polygons(30, 6, region, 77);
    REQUIRE(inst.cores.size() == 30);
    CHECK(inst.generator == "disjoint_polygons");
    for (const auto& core : inst.cores) {
        REQUIRE(core.vertices.size() == 6);
        CHECK_NOTHROW(validate_core(core));
        for (const auto& p : core.vertices) {
            CHECK(p.x >= region.x0);
            CHECK(p.x <= region.x1);
            CHECK(p.y >= region.y0);
            CHECK(p.y <= region.y1);
        }
    }
    for (std::size_t i = 0; i < inst.cores.size(); ++i)
        for (std::size_t k = i + 1; k < inst.cores.size(); ++k)
            CHECK(oracle::convex_polygons_disjoint(inst.cores[i].vertices,
                                                   inst.cores[k].vertices));

    auto again = gen_disjoint_polygons(30, 6, region, 77);
    CHECK(inst.cores[7].vertices[3].x == again.cores[7].vertices[3].x);
    CHECK_THROWS_AS(gen_disjoint_polygons(4, 2, region, 1), GenerationError);
}

TEST_CASE("adversarial family: every wide cap wall crosses every thin track") {
    auto adv = gen_adversarial(8, 3);
    REQUIRE(adv.instance.cores.size() == 8);
    REQUIRE(adv.radii.size() == 8);
    for (int i = 0; i < 4; ++i) CHECK(adv.radii[i] == doctest::Approx(0.05));
    for (int j = 4; j < 7; ++j) CHECK(adv.radii[j + 1] > adv.radii[j] * 1.1);

    std::vector<OffsetShape> shapes;
    for (std::size_t i = 0; i < 8; ++i)
        shapes.push_back(offset(adv.instance.cores[i], adv.radii[i]));
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) {
            auto hits = boundary_intersections(shapes[i], shapes[j]);
            CHECK(hits.size() == 4);
            for (const auto& h : hits) CHECK(h.cls == IntersectionClass::cr);
        }
    CHECK_THROWS_AS(gen_adversarial(7), GenerationError);
    CHECK_THROWS_AS(gen_adversarial(0), GenerationError);
}
