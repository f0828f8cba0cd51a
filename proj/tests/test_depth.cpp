#include <cmath>

#include "doctest.h"
#include "mink/depth.hpp"
#include "mink/models.hpp"
#include "mink/union_analysis.hpp"
#include "oracle.hpp"

using namespace mink;

TEST_CASE("depth counts strict containment only") {
    std::vector<OffsetShape> shapes;
    for (double r : {1.0, 2.0, 3.0, 4.0})
        shapes.push_back(offset(make_point_core({0.0, 0.0}), r));
    CHECK(depth(shapes, {0.0, 0.0}) == 4);
    CHECK(depth(shapes, {0.5, 0.0}) == 4);
    CHECK(depth(shapes, {3.5, 0.0}) == 1);
    CHECK(depth(shapes, {4.0, 0.0}) == 0);  // on the outermost rim
    CHECK(depth(shapes, {9.0, 0.0}) == 0);
    CHECK(depth({}, {0.0, 0.0}) == 0);
}

TEST_CASE("max depth on nested and lens configurations") {
    std::vector<OffsetShape> nested;
    for (double r : {1.0, 2.0, 3.0, 4.0})
        nested.push_back(offset(make_point_core({0.0, 0.0}), r));
    auto rep = max_depth(nested);
    CHECK(rep.value == 4);
    CHECK(depth(nested, rep.witness) == 4);

    std::vector<OffsetShape> lens = {
        offset(make_point_core({0.0, 0.0}), 1.0),
        offset(make_point_core({1.2, 0.0}), 1.0),
    };
    auto rep2 = max_depth(lens);
    CHECK(rep2.value == 2);  // witnesses alone see only 1, probes find the lens
    CHECK(depth(lens, rep2.witness) == 2);

    std::vector<OffsetShape> apart = {
        offset(make_point_core({0.0, 0.0}), 1.0),
        offset(make_point_core({5.0, 0.0}), 1.0),
    };
    CHECK(max_depth(apart).value == 1);
    CHECK(max_depth({}).value == 0);
}

TEST_CASE("max depth matches a dense grid search on random stacks") {
    for (std::uint64_t seed : {401, 402, 403}) {
        auto inst = gen_disjoint_segments(8, Box{0.0, 0.0, 1.0, 1.0}, seed, 0.35);
        Rng rng(derive_seed(seed, 4));
        std::vector<OffsetShape> shapes;
        for (const auto& core : inst.cores)
            shapes.push_back(offset(core, rng.uniform(0.15, 0.3)));
        auto rep = max_depth(shapes);
        CHECK(rep.value == oracle::depth_grid_max(shapes));
        CHECK(depth(shapes, rep.witness) == rep.value);
    }
}

TEST_CASE("shallow vertex counts by level on the three-disk rosette") {
    double h = std::sqrt(3.0) / 2.0;
    std::vector<OffsetShape> shapes = {
        offset(make_point_core({0.0, 0.0}), 1.0),
        offset(make_point_core({1.0, 0.0}), 1.0),
        offset(make_point_core({0.5, h}), 1.0),
    };
    CHECK(shallow_vertex_count(shapes, 0) == 3);  // outer crossings only
    CHECK(shallow_vertex_count(shapes, 1) == 6);  // inner three sit one deep
    CHECK(shallow_vertex_count(shapes, 5) == 6);
}

TEST_CASE("level zero crossings are exactly the union's crossing vertices") {
    for (std::uint64_t seed : {611, 612}) {
        auto inst = gen_disjoint_segments(10, Box{0.0, 0.0, 1.0, 1.0}, seed, 0.3);
        Rng rng(derive_seed(seed, 5));
        std::vector<OffsetShape> shapes;
        for (const auto& core : inst.cores)
            shapes.push_back(offset(core, rng.uniform(0.08, 0.16)));
        auto stats = union_stats(shapes);
        CHECK(shallow_vertex_count(shapes, 0) == stats.cc + stats.rr + stats.cr);
    }
}
