#include <cmath>

#include "doctest.h"
#include "mink/harness.hpp"

using namespace mink;

TEST_CASE("log-log fit recovers exact power laws") {
    std::vector<double> ns = {8, 16, 32, 64, 128, 256};
    std::vector<double> linear, quadratic, nlogn;
    for (double n : ns) {
        linear.push_back(3.0 * n);
        quadratic.push_back(0.25 * n * n);
        nlogn.push_back(n * std::log2(n));
    }
    CHECK(log_log_fit(ns, linear).slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(log_log_fit(ns, quadratic).slope == doctest::Approx(2.0).epsilon(1e-12));
    double s = log_log_fit(ns, nlogn).slope;
    CHECK(s > 1.2);  // the log factor shows up as a mild slope excess
    CHECK(s < 1.35);

    CHECK_THROWS_AS(log_log_fit({1.0}, {1.0}), ValidationError);
    CHECK_THROWS_AS(log_log_fit({1.0, 2.0}, {1.0}), ValidationError);
    CHECK_THROWS_AS(log_log_fit({1.0, 2.0}, {0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(log_log_fit({2.0, 2.0}, {1.0, 1.0}), ValidationError);
}

TEST_CASE("union scaling runs are deterministic end to end") {
    ExperimentConfig cfg;
    cfg.n_values = {6, 10};
    cfg.trials = 3;
    cfg.base_seed = 400;
    cfg.radii = DensityModel{DistributionSpec::make_uniform(0.06, 0.12)};
    auto res = run_union_scaling(cfg);
    REQUIRE(res.rows.size() == 6);
    REQUIRE(res.mean_psi.size() == 2);
    for (const auto& row : res.rows) CHECK(row.stats.psi > 0);
    CHECK(res.rows[0].seed == 400);
    CHECK(res.rows[5].seed == 405);

    auto res2 = run_union_scaling(cfg);
    CHECK(union_rows_csv(res) == union_rows_csv(res2));
    CHECK(res.fit.slope == res2.fit.slope);

    auto lines = union_rows_csv(res);
    CHECK(lines.rfind("n,trial,seed,cc,rr,cr,shape_vertices,rr_terminal,psi\n", 0) == 0);
}

TEST_CASE("adversarial scaling shows the quadratic blowup already at small n") {
    ExperimentConfig cfg;
    cfg.n_values = {4, 8, 16};
    cfg.trials = 1;
    cfg.base_seed = 12;
    cfg.generator = GeneratorKind::adversarial;
    auto res = run_union_scaling(cfg);
    CHECK(res.mean_psi[0] >= 16.0);
    CHECK(res.mean_psi[1] >= 64.0);
    CHECK(res.mean_psi[2] >= 256.0);
    CHECK(res.fit.slope > 1.4);

    cfg.shuffle_adversarial = true;
    auto shuffled = run_union_scaling(cfg);
    REQUIRE(shuffled.rows.size() == 3);
    for (const auto& row : shuffled.rows) CHECK(row.stats.psi > 0);
}

TEST_CASE("shallow counts grow with the level cutoff") {
    ExperimentConfig cfg;
    cfg.n_values = {8, 12};
    cfg.trials = 2;
    cfg.base_seed = 90;
    cfg.radii = DensityModel{DistributionSpec::make_uniform(0.1, 0.2)};
    auto lvl0 = run_shallow_scaling(cfg, 0);
    auto lvl2 = run_shallow_scaling(cfg, 2);
    REQUIRE(lvl0.rows.size() == lvl2.rows.size());
    for (std::size_t i = 0; i < lvl0.rows.size(); ++i) {
        CHECK(lvl0.rows[i].seed == lvl2.rows[i].seed);
        CHECK(lvl2.rows[i].shallow >= lvl0.rows[i].shallow);
    }
    CHECK(shallow_rows_csv(lvl0) != shallow_rows_csv(lvl2));
}

TEST_CASE("vulnerability bench compares estimator against the dense grid") {
    VulnBenchConfig cfg;
    cfg.n_values = {5};
    cfg.trials = 2;
    cfg.base_seed = 7;
    cfg.delta = 0.5;
    cfg.phi = FailureFunction::make_exponential(0.2);
    auto res = run_vuln_bench(cfg);
    REQUIRE(res.rows.size() == 2);
    for (const auto& row : res.rows) {
        CHECK(row.grid_phi > 0.0);
        CHECK(row.ratio > 0.5);
        CHECK(row.approx_phi <= row.grid_phi + cfg.delta / 2.0 + 1e-9);
        CHECK(row.approx_ms >= 0.0);
    }
    auto res2 = run_vuln_bench(cfg);
    CHECK(vuln_bench_csv(res) == vuln_bench_csv(res2));  // timings stay out
}
