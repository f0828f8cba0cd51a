#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mink/models.hpp"
#include "mink/union_analysis.hpp"
#include "mink/vulnerability.hpp"

namespace mink {

struct RegressionReport {
    double slope = 0.0;
    double intercept = 0.0;
};

// least squares on (ln x, ln y); throws unless both series are positive
RegressionReport log_log_fit(const std::vector<double>& xs,
                             const std::vector<double>& ys);

enum class GeneratorKind { segments, polygons, adversarial };

struct ExperimentConfig {
    std::vector<std::size_t> n_values;
    std::size_t trials = 5;
    std::uint64_t base_seed = 0;
    GeneratorKind generator = GeneratorKind::segments;
    std::size_t polygon_arity = 4;
    Box region{0.0, 0.0, 1.0, 1.0};
    double max_len = 0.0;  // segments only; <=0 means auto_segment_length
    RadiiModel radii = DensityModel{DistributionSpec::make_uniform(0.05, 0.15)};
    bool shuffle_adversarial = false;  // permute the built-in radii over cores
};

struct UnionTrialRow {
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    UnionStats stats;
};

struct UnionScalingResult {
    std::vector<UnionTrialRow> rows;
    std::vector<double> mean_psi;  // aligned with config n_values
    RegressionReport fit;          // ln mean_psi over ln n; zeros if < 2 sizes
};

UnionScalingResult run_union_scaling(const ExperimentConfig& cfg);

struct ShallowTrialRow {
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    int level = 0;
    std::size_t shallow = 0;
};

struct ShallowScalingResult {
    std::vector<ShallowTrialRow> rows;
    std::vector<double> mean_shallow;
    RegressionReport fit;
};

ShallowScalingResult run_shallow_scaling(const ExperimentConfig& cfg, int level);

struct VulnBenchConfig {
    std::vector<std::size_t> n_values;
    std::size_t trials = 3;
    std::uint64_t base_seed = 0;
    double delta = 0.5;
    FailureFunction phi = FailureFunction::make_exponential(0.2);
    Box region{0.0, 0.0, 1.0, 1.0};
    double max_len = 0.0;
};

struct VulnBenchRow {
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double approx_phi = 0.0;  // exact score at the estimator's location
    double grid_phi = 0.0;
    double ratio = 0.0;
    std::size_t family_size = 0;
    std::size_t phase2_sample = 0;
    bool exhaustive = false;
    double approx_ms = 0.0;  // wall clock, excluded from the CSV
    double grid_ms = 0.0;
};

struct VulnBenchResult {
    std::vector<VulnBenchRow> rows;
};

VulnBenchResult run_vuln_bench(const VulnBenchConfig& cfg);

// CSV renderings, %.17g for doubles so reruns match byte for byte; timing
// columns are deliberately left out
std::string union_rows_csv(const UnionScalingResult& res);
std::string shallow_rows_csv(const ShallowScalingResult& res);
std::string vuln_bench_csv(const VulnBenchResult& res);

}  // namespace mink
