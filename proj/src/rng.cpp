#include "mink/rng.hpp"

#include <cmath>

namespace mink {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 finalizer over a simple combine
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n <= 1) return 0;
    // rejection sampling to kill modulo bias
    std::uint64_t limit = ~0ULL - (~0ULL % n + 1) % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % n;
}

double Rng::exponential(double rate) {
    double u;
    do {
        u = uniform01();
    } while (u <= 0.0);
    return -std::log(u) / rate;
}

double Rng::normal(double mu, double sigma) {
    if (have_spare_) {
        have_spare_ = false;
        return mu + sigma * spare_;
    }
    double u1, u2;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    u2 = uniform01();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return mu + sigma * mag * std::cos(2.0 * M_PI * u2);
}

}  // namespace mink
