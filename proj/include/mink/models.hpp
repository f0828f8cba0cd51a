#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mink/geometry.hpp"
#include "mink/rng.hpp"

namespace mink {

// thrown when rejection sampling cannot place an instance
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Box {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

struct DistributionSpec {
    enum class Kind { uniform, exponential, discrete, truncated_gaussian };
    Kind kind = Kind::uniform;
    double lo = 0.0, hi = 1.0;     // uniform
    double rate = 1.0;             // exponential
    std::vector<double> values;    // discrete support
    std::vector<double> weights;   // discrete weights, any positive scale
    double mu = 1.0, sigma = 0.5;  // truncated gaussian, resampled until >= cut
    double cut = 0.0;

    static DistributionSpec make_uniform(double lo, double hi);
    static DistributionSpec make_exponential(double rate);
    static DistributionSpec make_discrete(std::vector<double> values,
                                          std::vector<double> weights = {});
    static DistributionSpec make_truncated_gaussian(double mu, double sigma,
                                                    double cut = 0.0);
};

double sample(const DistributionSpec& spec, Rng& rng);

// Radii either as a uniformly random permutation of a fixed multiset, or as
// independent draws from a density.
struct PermutationModel {
    std::vector<double> theta;  // must have one entry per core
};
struct DensityModel {
    DistributionSpec spec;
};
using RadiiModel = std::variant<PermutationModel, DensityModel>;

std::vector<double> assign_radii(const RadiiModel& model, std::size_t n, Rng& rng);

struct Instance {
    std::vector<ConvexCore> cores;
    std::uint64_t seed = 0;
    std::string generator;
};

// segment length scale used when callers do not pin one
double auto_segment_length(std::size_t n, const Box& region);

// n pairwise-disjoint segments inside region. max_len <= 0 picks
// auto_segment_length. Every coordinate gets a final jitter so later radius
// assignments avoid exact tangencies.
Instance gen_disjoint_segments(std::size_t n, const Box& region,
                               std::uint64_t seed, double max_len = 0.0,
                               double jitter = 1e-7);

// n disjoint strictly convex s-gons, one per cell of a shuffled sqrt-grid,
// vertices on a circle inscribed in the cell.
Instance gen_disjoint_polygons(std::size_t n, std::size_t s, const Box& region,
                               std::uint64_t seed, double jitter = 1e-7);

// Hand-built family whose union boundary has quadratically many vertices: a
// stack of long thin near-horizontal racetracks pierced by the bottom caps of
// n/2 wide disks grown around short near-vertical segments parked above the
// stack. Each cap wall crosses every racetrack twice on each side. Radii are
// part of the construction, so they are returned alongside the cores.
struct AdversarialInstance {
    Instance instance;
    std::vector<double> radii;
};
AdversarialInstance gen_adversarial(std::size_t n, std::uint64_t seed = 0);

}  // namespace mink
