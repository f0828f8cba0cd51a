#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mink/geometry.hpp"
#include "mink/rng.hpp"

namespace mink {

// Monotone non-increasing failure likelihood over distance, values in [0,1].
struct FailureFunction {
    enum class Kind { linear, exponential, table, custom };
    Kind kind = Kind::exponential;
    double scale = 1.0;  // linear: reaches 0 at scale; exponential: e-folding
    std::vector<std::pair<double, double>> table;  // (distance, value) knots
    std::function<double(double)> fn;              // custom, non-increasing

    double value(double x) const;
    // generalized inverse inf{x >= 0 : value(x) <= y}; doubling then bisection
    double inverse(double y) const;

    static FailureFunction make_linear(double reach);
    static FailureFunction make_exponential(double efold);
    static FailureFunction make_table(std::vector<std::pair<double, double>> knots);
    static FailureFunction make_custom(std::function<double(double)> fn);
};

// total failure likelihood at q: sum of value(dist(q, core)) over all cores
double phi_point(const FailureFunction& phi, const std::vector<ConvexCore>& cores,
                 const Point& q);

// threshold radii r_j = inverse(1 - j/m), j = 1..m-1, ascending
struct Discretization {
    std::size_t m = 0;
    double delta = 0.0;
    std::vector<double> radii;
};
Discretization discretize(const FailureFunction& phi, std::size_t n, double delta);

// depth of q in the implicit family {core_i grown by r_j}, counted without
// materializing the copies: per core, the number of radii strictly above the
// distance to the core
std::size_t lazy_depth(const Discretization& disc,
                       const std::vector<ConvexCore>& cores, const Point& q);

// A concrete (sub)family of grown copies, grouped by core so depth queries
// cost one distance per core instead of one per copy.
struct CopyFamily {
    const std::vector<ConvexCore>* cores = nullptr;
    std::vector<std::vector<double>> radii_by_core;  // ascending per core
    std::size_t total = 0;

    std::size_t depth_at(const Point& q) const;
};

CopyFamily full_family(const std::vector<ConvexCore>& cores,
                       const Discretization& disc, double jitter_scale = 0.0,
                       std::uint64_t jitter_seed = 0);
CopyFamily sampled_family(const std::vector<ConvexCore>& cores,
                          const Discretization& disc, std::size_t count,
                          Rng& rng, double jitter_scale = 1e-7);

// Exact maximum depth over a copy family with a witness point. Candidate set:
// quadrant probes around crossings of copies grown from different cores
// (same-core copies are nested and never cross) plus one interior witness per
// core. Crossing pairs are pruned per core pair by distance and directed
// Hausdorff radius windows.
struct FamilyMax {
    std::size_t depth = 0;
    Point witness;
};
FamilyMax family_max_depth(const CopyFamily& fam, double eps = kEpsGeom,
                           double probe_eps = 1e-6);

struct Phase1Result {
    double rho = 0.0;  // estimated max depth as a fraction of the family size
    int steps = 0;
    bool converged = false;
    std::size_t last_sample = 0;
    bool exhaustive = false;  // the deciding step looked at every copy
};
Phase1Result phase1_depth_estimate(const std::vector<ConvexCore>& cores,
                                   const Discretization& disc, std::uint64_t seed);

struct VulnReport {
    Point location;
    double phi_at_location = 0.0;  // exact score at the returned point
    double phi_estimate = 0.0;     // sampled estimator of the same quantity
    double rho_estimate = 0.0;
    int phase1_steps = 0;
    bool phase1_converged = false;
    std::size_t family_size = 0;
    std::size_t phase1_sample = 0;
    std::size_t phase2_sample = 0;
    bool exhaustive = false;  // phase 2 used the whole family
};

// Two-phase estimate of the most vulnerable location: geometric halving to a
// constant-factor depth estimate, then one sized sample whose deepest point
// is returned. Sample sizes are capped by the family size; at the cap the
// answer is the exact deepest copy-cover point.
VulnReport approx_most_vulnerable(const std::vector<ConvexCore>& cores,
                                  const FailureFunction& phi, double delta,
                                  std::uint64_t seed);

struct PhiMax {
    Point location;
    double value = 0.0;
};
// dense reference search: coarse grid over the core bounding box, then
// repeated local refinement around the best cell
PhiMax brute_force_phi_max(const std::vector<ConvexCore>& cores,
                           const FailureFunction& phi, std::size_t cells = 160,
                           int refinements = 2);

}  // namespace mink
