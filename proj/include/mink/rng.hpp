#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mink {

// Stable derivation of per-stream seeds (splitmix64 over the pair), so
// parallel trials and algorithm phases get independent, reproducible streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// mt19937_64 engine with hand-rolled samplers. The standard distributions are
// implementation-defined, these are not, so seeded sequences stay identical
// everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {  // [0, 1), 53-bit resolution
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n);  // unbiased draw from [0, n)

    double exponential(double rate);  // inverse CDF

    double normal(double mu, double sigma);  // Box-Muller with cached spare

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t k = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[k]);
        }
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mink
