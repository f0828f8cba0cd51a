#include "mink/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mink {

namespace {

constexpr int kMaxRetries = 1000;

void jitter_points(std::vector<std::vector<Point>>& chains, double jitter, Rng& rng) {
    if (jitter <= 0.0) return;
    for (auto& chain : chains)
        for (auto& p : chain) {
            p.x += rng.uniform(-jitter, jitter);
            p.y += rng.uniform(-jitter, jitter);
        }
}

}  // namespace

DistributionSpec DistributionSpec::make_uniform(double lo, double hi) {
    DistributionSpec s;
    s.kind = Kind::uniform;
    s.lo = lo;
    s.hi = hi;
    return s;
}

DistributionSpec DistributionSpec::make_exponential(double rate) {
    DistributionSpec s;
    s.kind = Kind::exponential;
    s.rate = rate;
    return s;
}

DistributionSpec DistributionSpec::make_discrete(std::vector<double> values,
                                                 std::vector<double> weights) {
    DistributionSpec s;
    s.kind = Kind::discrete;
    s.values = std::move(values);
    if (weights.empty()) weights.assign(s.values.size(), 1.0);
    s.weights = std::move(weights);
    return s;
}

DistributionSpec DistributionSpec::make_truncated_gaussian(double mu, double sigma,
                                                           double cut) {
    DistributionSpec s;
    s.kind = Kind::truncated_gaussian;
    s.mu = mu;
    s.sigma = sigma;
    s.cut = cut;
    return s;
}

double sample(const DistributionSpec& spec, Rng& rng) {
    switch (spec.kind) {
        case DistributionSpec::Kind::uniform:
            return rng.uniform(spec.lo, spec.hi);
        case DistributionSpec::Kind::exponential:
            return rng.exponential(spec.rate);
        case DistributionSpec::Kind::discrete: {
            if (spec.values.empty() || spec.values.size() != spec.weights.size())
                throw GenerationError("discrete distribution needs matching values/weights");
            double total = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
            if (!(total > 0.0))
                throw GenerationError("discrete distribution needs positive total weight");
            double u = rng.uniform01() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < spec.values.size(); ++i) {
                acc += spec.weights[i];
                if (u < acc) return spec.values[i];
            }
            return spec.values.back();
        }
        case DistributionSpec::Kind::truncated_gaussian: {
            for (int i = 0; i < kMaxRetries; ++i) {
                double x = rng.normal(spec.mu, spec.sigma);
                if (x >= spec.cut) return x;
            }
            throw GenerationError("truncated gaussian rejected too often; cut too far out");
        }
    }
    throw GenerationError("unknown distribution kind");
}

std::vector<double> assign_radii(const RadiiModel& model, std::size_t n, Rng& rng) {
    if (const auto* perm = std::get_if<PermutationModel>(&model)) {
        if (perm->theta.size() != n)
            throw GenerationError("permutation model needs exactly one radius per core");
        std::vector<double> radii = perm->theta;
        rng.shuffle(radii);
        return radii;
    }
    const auto& density = std::get<DensityModel>(model);
    std::vector<double> radii(n);
    for (auto& r : radii) r = sample(density.spec, rng);
    return radii;
}

double auto_segment_length(std::size_t n, const Box& region) {
    return 0.6 * std::min(region.width(), region.height()) /
           std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
}

Instance gen_disjoint_segments(std::size_t n, const Box& region, std::uint64_t seed,
                               double max_len, double jitter) {
    if (n == 0) throw GenerationError("need at least one segment");
    double w = region.width(), h = region.height();
    if (!(w > 0.0) || !(h > 0.0)) throw GenerationError("empty region");
    if (max_len <= 0.0) max_len = auto_segment_length(n, region);
    double clearance = std::max(0.02 * max_len, 50.0 * jitter);

    Rng rng(derive_seed(seed, 0));
    std::vector<std::vector<Point>> segs;
    segs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
            Point a{rng.uniform(region.x0, region.x1), rng.uniform(region.y0, region.y1)};
            double ang = rng.uniform(0.0, 2.0 * M_PI);
            double len = max_len * rng.uniform(0.3, 1.0);
            Point b{a.x + len * std::cos(ang), a.y + len * std::sin(ang)};
            if (b.x < region.x0 || b.x > region.x1 || b.y < region.y0 || b.y > region.y1)
                continue;
            bool clear = true;
            for (const auto& s : segs)
                if (dist_segment_segment({a, b}, {s[0], s[1]}) < clearance) {
                    clear = false;
                    break;
                }
            if (!clear) continue;
            segs.push_back({a, b});
            placed = true;
            break;
        }
        if (!placed)
            throw GenerationError("could not place disjoint segment " +
                                  std::to_string(i) + "; region too crowded");
    }
    jitter_points(segs, jitter, rng);

    Instance inst;
    inst.seed = seed;
    inst.generator = "disjoint_segments";
    inst.cores.reserve(n);
    for (const auto& s : segs) inst.cores.push_back(make_segment_core(s[0], s[1]));
    return inst;
}

Instance gen_disjoint_polygons(std::size_t n, std::size_t s, const Box& region,
                               std::uint64_t seed, double jitter) {
    if (n == 0) throw GenerationError("need at least one polygon");
    if (s < 3) throw GenerationError("polygons need at least three vertices");
    double w = region.width(), h = region.height();
    if (!(w > 0.0) || !(h > 0.0)) throw GenerationError("empty region");

    Rng rng(derive_seed(seed, 0));
    std::size_t m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    double cw = w / static_cast<double>(m), ch = h / static_cast<double>(m);

    std::vector<std::size_t> cells(m * m);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    rng.shuffle(cells);

    double min_gap = 0.25 * (2.0 * M_PI / static_cast<double>(s));
    double max_gap = 0.9 * M_PI;

    std::vector<std::vector<Point>> polys;
    polys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cell = cells[i];
        double cx = region.x0 + (static_cast<double>(cell % m) + 0.5) * cw +
                    cw * rng.uniform(-0.08, 0.08);
        double cy = region.y0 + (static_cast<double>(cell / m) + 0.5) * ch +
                    ch * rng.uniform(-0.08, 0.08);
        double radius = 0.5 * std::min(cw, ch) * rng.uniform(0.55, 0.8);

        std::vector<double> angles(s);
        bool ok = false;
        for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
            for (auto& a : angles) a = rng.uniform(0.0, 2.0 * M_PI);
            std::sort(angles.begin(), angles.end());
            ok = true;
            for (std::size_t k = 0; k < s; ++k) {
                double gap = (k + 1 < s) ? angles[k + 1] - angles[k]
                                         : angles[0] + 2.0 * M_PI - angles[s - 1];
                if (gap < min_gap || gap > max_gap) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            throw GenerationError("could not sample well-spread polygon angles");
        std::vector<Point> ring;
        ring.reserve(s);
        for (double a : angles)
            ring.push_back({cx + radius * std::cos(a), cy + radius * std::sin(a)});
        polys.push_back(std::move(ring));
    }
    jitter_points(polys, jitter, rng);

    Instance inst;
    inst.seed = seed;
    inst.generator = "disjoint_polygons";
    inst.cores.reserve(n);
    for (auto& ring : polys) inst.cores.push_back(make_polygon_core(ring));
    return inst;
}

AdversarialInstance gen_adversarial(std::size_t n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw GenerationError("adversarial family needs an even count of at least 2");
    std::size_t half = n / 2;
    double g = 1.0;              // vertical pitch of the stack
    double r_thin = 0.05 * g;    // racetrack radius
    double tip = -2.0 * g;       // lowest point of every piercing cap
    double rho0 = (static_cast<double>(half) + 4.0) * g;
    double growth = 1.2;
    double y_top = (static_cast<double>(half) - 1.0) * g + r_thin;

    // footprint half-width of cap j where it exits the top of the stack
    std::vector<double> rho(half), w_max(half);
    for (std::size_t j = 0; j < half; ++j) {
        rho[j] = rho0 * std::pow(growth, static_cast<double>(j));
        double center_y = tip + rho[j];
        double dy = center_y - (y_top + 0.5 * g);
        w_max[j] = std::sqrt(std::max(0.0, rho[j] * rho[j] - dy * dy));
    }

    std::vector<double> cap_x(half);
    cap_x[0] = 0.0;
    for (std::size_t j = 1; j < half; ++j)
        cap_x[j] = cap_x[j - 1] + w_max[j - 1] + w_max[j] + g;

    double x_lo = cap_x[0] - w_max[0] - 2.0 * g;
    double x_hi = cap_x[half - 1] + w_max[half - 1] + 2.0 * g;

    std::vector<std::vector<Point>> chains;
    std::vector<double> radii;
    chains.reserve(n);
    radii.reserve(n);
    for (std::size_t i = 0; i < half; ++i) {  // near-horizontal racetracks
        double y = static_cast<double>(i) * g;
        double slope = static_cast<double>(i + 1) * 1e-8;
        chains.push_back({{x_lo, y}, {x_hi, y + slope * (x_hi - x_lo)}});
        radii.push_back(r_thin);
    }
    for (std::size_t j = 0; j < half; ++j) {  // near-vertical pierced cores
        double cy = tip + rho[j];
        double tilt = static_cast<double>(j + 1) * 1e-8;
        chains.push_back({{cap_x[j], cy}, {cap_x[j] + tilt * g, cy + g}});
        radii.push_back(rho[j]);
    }

    Rng rng(derive_seed(seed, 1));
    jitter_points(chains, 1e-7, rng);

    AdversarialInstance out;
    out.instance.seed = seed;
    out.instance.generator = "adversarial";
    out.instance.cores.reserve(n);
    for (const auto& c : chains)
        out.instance.cores.push_back(make_segment_core(c[0], c[1]));
    out.radii = std::move(radii);
    return out;
}

}  // namespace mink
