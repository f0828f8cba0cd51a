#include "mink/vulnerability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mink {

namespace {

constexpr double kSampleConstant = 0.5;  // empirically safe for the 1/4 and
                                         // delta/4 approximation guarantees

// Euclidean distance to the core as a set: zero inside a polygon
double core_set_distance(const Point& q, const ConvexCore& core) {
    if (core.vertices.size() >= 3)
        return std::max(0.0, signed_dist_point_core(q, core));
    return dist_point_core(q, core);
}

std::vector<Segment> core_edges(const ConvexCore& core) {
    std::vector<Segment> edges;
    if (core.vertices.size() == 2) {
        edges.push_back({core.vertices[0], core.vertices[1]});
        return edges;
    }
    for (std::size_t i = 0; i < core.vertices.size(); ++i)
        edges.push_back({core.vertices[i],
                         core.vertices[(i + 1) % core.vertices.size()]});
    return edges;
}

double core_distance(const ConvexCore& a, const ConvexCore& b) {
    if (a.vertices.size() == 1) return core_set_distance(a.vertices[0], b);
    if (b.vertices.size() == 1) return core_set_distance(b.vertices[0], a);
    for (const auto& v : a.vertices)
        if (core_set_distance(v, b) == 0.0) return 0.0;
    for (const auto& v : b.vertices)
        if (core_set_distance(v, a) == 0.0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ea : core_edges(a))
        for (const auto& eb : core_edges(b))
            best = std::min(best, dist_segment_segment(ea, eb));
    return best;
}

// max over a of dist(a, b); for convex cores the max sits on a vertex
double directed_hausdorff(const ConvexCore& a, const ConvexCore& b) {
    double h = 0.0;
    for (const auto& v : a.vertices) h = std::max(h, core_set_distance(v, b));
    return h;
}

Point core_centroid(const ConvexCore& core) {
    Point acc{0.0, 0.0};
    for (const auto& v : core.vertices) acc = acc + v;
    return (1.0 / static_cast<double>(core.vertices.size())) * acc;
}

std::size_t sample_size(double rho, double eps, std::size_t n) {
    double raw = (kSampleConstant / (eps * eps * rho)) *
                 std::log(std::max<double>(static_cast<double>(n), 2.0));
    if (raw > 1e18) return static_cast<std::size_t>(1e18);
    return static_cast<std::size_t>(std::ceil(raw));
}

int phase1_step_cap(std::size_t n) {
    if (n <= 1) return 1;
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

}  // namespace

double FailureFunction::value(double x) const {
    if (x < 0.0) x = 0.0;
    switch (kind) {
        case Kind::linear:
            return std::max(0.0, 1.0 - x / scale);
        case Kind::exponential:
            return std::exp(-x / scale);
        case Kind::table: {
            if (x <= table.front().first) return table.front().second;
            if (x >= table.back().first) return table.back().second;
            auto it = std::upper_bound(
                table.begin(), table.end(), x,
                [](double v, const std::pair<double, double>& k) { return v < k.first; });
            auto hi = *it;
            auto lo = *(it - 1);
            double t = (x - lo.first) / (hi.first - lo.first);
            return lo.second + t * (hi.second - lo.second);
        }
        case Kind::custom:
            return fn(x);
    }
    return 0.0;
}

double FailureFunction::inverse(double y) const {
    if (value(0.0) <= y) return 0.0;
    double hi = 1.0;
    while (value(hi) > y) {
        hi *= 2.0;
        if (hi > 1e30)
            throw ValidationError("failure function never drops to the requested level");
    }
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    while (hi - lo > 1e-12 * (1.0 + hi)) {
        double mid = 0.5 * (lo + hi);
        if (value(mid) <= y)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

FailureFunction FailureFunction::make_linear(double reach) {
    if (!(reach > 0.0)) throw ValidationError("linear failure needs a positive reach");
    FailureFunction f;
    f.kind = Kind::linear;
    f.scale = reach;
    return f;
}

FailureFunction FailureFunction::make_exponential(double efold) {
    if (!(efold > 0.0))
        throw ValidationError("exponential failure needs a positive e-folding length");
    FailureFunction f;
    f.kind = Kind::exponential;
    f.scale = efold;
    return f;
}

FailureFunction FailureFunction::make_table(std::vector<std::pair<double, double>> knots) {
    if (knots.empty()) throw ValidationError("table failure needs at least one knot");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].second < 0.0 || knots[i].second > 1.0)
            throw ValidationError("table failure values must stay within [0,1]");
        if (i > 0 && (knots[i].first <= knots[i - 1].first ||
                      knots[i].second > knots[i - 1].second))
            throw ValidationError("table failure knots must increase in distance and "
                                  "never increase in value");
    }
    if (knots.front().first < 0.0)
        throw ValidationError("table failure distances must be non-negative");
    FailureFunction f;
    f.kind = Kind::table;
    f.table = std::move(knots);
    return f;
}

FailureFunction FailureFunction::make_custom(std::function<double(double)> fn) {
    if (!fn) throw ValidationError("custom failure needs a callable");
    FailureFunction f;
    f.kind = Kind::custom;
    f.fn = std::move(fn);
    return f;
}

double phi_point(const FailureFunction& phi, const std::vector<ConvexCore>& cores,
                 const Point& q) {
    double total = 0.0;
    for (const auto& c : cores) total += phi.value(core_set_distance(q, c));
    return total;
}

Discretization discretize(const FailureFunction& phi, std::size_t n, double delta) {
    if (n == 0) throw ValidationError("discretization needs at least one site");
    if (!(delta > 0.0)) throw ValidationError("delta must be positive");
    Discretization d;
    d.delta = delta;
    d.m = static_cast<std::size_t>(std::ceil(2.0 * static_cast<double>(n) / delta));
    if (d.m < 2) throw ValidationError("delta too coarse for this instance");
    d.radii.reserve(d.m - 1);
    for (std::size_t j = 1; j < d.m; ++j) {
        double y = 1.0 - static_cast<double>(j) / static_cast<double>(d.m);
        d.radii.push_back(phi.inverse(y));
    }
    return d;
}

std::size_t lazy_depth(const Discretization& disc,
                       const std::vector<ConvexCore>& cores, const Point& q) {
    std::size_t depth = 0;
    for (const auto& core : cores) {
        double d = core_set_distance(q, core);
        auto it = std::upper_bound(disc.radii.begin(), disc.radii.end(), d);
        depth += static_cast<std::size_t>(disc.radii.end() - it);
    }
    return depth;
}

std::size_t CopyFamily::depth_at(const Point& q) const {
    std::size_t depth = 0;
    for (std::size_t i = 0; i < radii_by_core.size(); ++i) {
        const auto& radii = radii_by_core[i];
        if (radii.empty()) continue;
        double d = core_set_distance(q, (*cores)[i]);
        auto it = std::upper_bound(radii.begin(), radii.end(), d);
        depth += static_cast<std::size_t>(radii.end() - it);
    }
    return depth;
}

CopyFamily full_family(const std::vector<ConvexCore>& cores,
                       const Discretization& disc, double jitter_scale,
                       std::uint64_t jitter_seed) {
    CopyFamily fam;
    fam.cores = &cores;
    fam.radii_by_core.assign(cores.size(), disc.radii);
    Rng rng(derive_seed(jitter_seed, 3));
    for (auto& radii : fam.radii_by_core) {
        if (jitter_scale > 0.0) {
            for (auto& r : radii) r *= 1.0 + jitter_scale * rng.uniform(-1.0, 1.0);
            std::sort(radii.begin(), radii.end());
        }
        fam.total += radii.size();
    }
    return fam;
}

CopyFamily sampled_family(const std::vector<ConvexCore>& cores,
                          const Discretization& disc, std::size_t count, Rng& rng,
                          double jitter_scale) {
    CopyFamily fam;
    fam.cores = &cores;
    fam.radii_by_core.assign(cores.size(), {});
    std::size_t copies_per_core = disc.radii.size();
    if (copies_per_core == 0 || cores.empty()) return fam;
    for (std::size_t t = 0; t < count; ++t) {
        std::uint64_t u = rng.below(cores.size() * copies_per_core);
        std::size_t core = static_cast<std::size_t>(u / copies_per_core);
        std::size_t j = static_cast<std::size_t>(u % copies_per_core);
        double r = disc.radii[j];
        if (jitter_scale > 0.0) r *= 1.0 + jitter_scale * rng.uniform(-1.0, 1.0);
        fam.radii_by_core[core].push_back(r);
    }
    for (auto& radii : fam.radii_by_core) {
        std::sort(radii.begin(), radii.end());
        fam.total += radii.size();
    }
    return fam;
}

FamilyMax family_max_depth(const CopyFamily& fam, double eps, double probe_eps) {
    FamilyMax best;
    if (fam.total == 0) return best;
    const auto& cores = *fam.cores;

    // how much depth the cores from index i onward can still contribute; lets
    // probe evaluations bail once they cannot beat the running best
    std::vector<std::size_t> tail(cores.size() + 1, 0);
    for (std::size_t i = cores.size(); i-- > 0;)
        tail[i] = tail[i + 1] + fam.radii_by_core[i].size();

    auto depth_bounded = [&](const Point& q, std::size_t beat) -> std::size_t {
        std::size_t d = 0;
        for (std::size_t i = 0; i < cores.size(); ++i) {
            if (d + tail[i] <= beat) return 0;  // cannot reach beat + 1 anymore
            const auto& radii = fam.radii_by_core[i];
            if (radii.empty()) continue;
            double dist = core_set_distance(q, cores[i]);
            auto it = std::upper_bound(radii.begin(), radii.end(), dist);
            d += static_cast<std::size_t>(radii.end() - it);
        }
        return d;
    };

    for (std::size_t i = 0; i < cores.size(); ++i) {
        if (fam.radii_by_core[i].empty()) continue;
        Point w = core_centroid(cores[i]);
        std::size_t d = fam.depth_at(w);
        if (d > best.depth || best.depth == 0) best = {d, w};
    }

    // boundaries of every copy, grouped like the radii
    std::vector<std::vector<std::vector<BoundaryCurve>>> rims(cores.size());
    for (std::size_t i = 0; i < cores.size(); ++i) {
        rims[i].reserve(fam.radii_by_core[i].size());
        for (double r : fam.radii_by_core[i])
            rims[i].push_back(boundary(offset(cores[i], r)));
    }

    for (std::size_t i = 0; i < cores.size(); ++i) {
        const auto& ri = fam.radii_by_core[i];
        if (ri.empty()) continue;
        for (std::size_t k = i + 1; k < cores.size(); ++k) {
            const auto& rk = fam.radii_by_core[k];
            if (rk.empty()) continue;
            double dmin = core_distance(cores[i], cores[k]);
            if (ri.back() + rk.back() <= dmin) continue;
            double h_ik = directed_hausdorff(cores[i], cores[k]);
            double h_ki = directed_hausdorff(cores[k], cores[i]);
            for (std::size_t a = 0; a < ri.size(); ++a) {
                double ra = ri[a];
                // copies of k that can cross this copy: overlapping but not
                // nested either way
                double lo = std::max(dmin - ra, ra - h_ki);
                double hi = ra + h_ik;
                std::size_t b0 = static_cast<std::size_t>(
                    std::upper_bound(rk.begin(), rk.end(), lo) - rk.begin());
                std::size_t b1 = static_cast<std::size_t>(
                    std::lower_bound(rk.begin(), rk.end(), hi) - rk.begin());
                for (std::size_t b = b0; b < b1; ++b) {
                    for (const auto& hit :
                         boundary_intersections(rims[i][a], rims[k][b], eps)) {
                        Point n1 = curve_outward_normal_at(rims[i][a][hit.curve_first],
                                                           hit.p);
                        Point n2 = curve_outward_normal_at(rims[k][b][hit.curve_second],
                                                           hit.p);
                        // of the four faces meeting at a crossing, the one
                        // inside both shapes is always the deepest
                        Point v{n1.x + n2.x, n1.y + n2.y};
                        double len = norm(v);
                        if (len > 1e-6) {
                            Point q = hit.p - (probe_eps / len) * v;
                            std::size_t d = depth_bounded(q, best.depth);
                            if (d > best.depth) best = {d, q};
                            continue;
                        }
                        for (double s1 : {-1.0, 1.0}) {  // near-antipodal rims
                            for (double s2 : {-1.0, 1.0}) {
                                Point w{s1 * n1.x + s2 * n2.x, s1 * n1.y + s2 * n2.y};
                                double wlen = norm(w);
                                if (wlen < 1e-9) continue;
                                Point q = hit.p + (probe_eps / wlen) * w;
                                std::size_t d = depth_bounded(q, best.depth);
                                if (d > best.depth) best = {d, q};
                            }
                        }
                    }
                }
            }
        }
    }
    return best;
}

Phase1Result phase1_depth_estimate(const std::vector<ConvexCore>& cores,
                                   const Discretization& disc, std::uint64_t seed) {
    Phase1Result res;
    std::size_t family = cores.size() * disc.radii.size();
    int cap = phase1_step_cap(cores.size());
    double omega = 0.0, rho_i = 1.0;
    for (int step = 1; step <= cap; ++step) {
        rho_i = std::pow(2.0, -step);
        std::size_t nu = std::min(sample_size(rho_i, 0.25, cores.size()), family);
        res.exhaustive = nu >= family;
        res.steps = step;
        res.last_sample = nu;
        CopyFamily fam;
        Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(step)));
        if (res.exhaustive)
            fam = full_family(cores, disc, 1e-7,
                              derive_seed(seed, 200 + static_cast<std::uint64_t>(step)));
        else
            fam = sampled_family(cores, disc, nu, rng);
        omega = static_cast<double>(family_max_depth(fam).depth) /
                static_cast<double>(fam.total);
        if (omega > 0.75 * rho_i) {
            res.rho = omega - 0.25 * rho_i;
            res.converged = true;
            return res;
        }
    }
    // every scale down to the cap looked shallow; fall back to the cap scale
    res.rho = std::max(omega, 0.5 * rho_i);
    res.converged = false;
    return res;
}

VulnReport approx_most_vulnerable(const std::vector<ConvexCore>& cores,
                                  const FailureFunction& phi, double delta,
                                  std::uint64_t seed) {
    if (cores.empty()) throw ValidationError("need at least one site");
    Discretization disc = discretize(phi, cores.size(), delta);
    std::size_t family = cores.size() * disc.radii.size();
    int cap = phase1_step_cap(cores.size());

    for (int attempt = 0;; ++attempt) {
        try {
            std::uint64_t run_seed = derive_seed(seed, 50 + static_cast<std::uint64_t>(attempt));
            Phase1Result p1 = phase1_depth_estimate(cores, disc, run_seed);

            double rho_floor = 0.5 * std::pow(2.0, -cap);
            double rho_use = std::min(1.0, std::max(p1.rho, rho_floor));
            std::size_t nu2 =
                std::min(sample_size(rho_use, delta / 4.0, cores.size()), family);
            VulnReport rep;
            rep.exhaustive = nu2 >= family;
            CopyFamily fam;
            Rng rng(derive_seed(run_seed, 300));
            if (rep.exhaustive)
                fam = full_family(cores, disc, 1e-7, derive_seed(run_seed, 301));
            else
                fam = sampled_family(cores, disc, nu2, rng);
            FamilyMax fm = family_max_depth(fam);

            rep.location = fm.witness;
            rep.phi_estimate = static_cast<double>(fm.depth) *
                               static_cast<double>(family) /
                               (static_cast<double>(fam.total) *
                                static_cast<double>(disc.m));
            rep.phi_at_location = phi_point(phi, cores, fm.witness);
            rep.rho_estimate = p1.rho;
            rep.phase1_steps = p1.steps;
            rep.phase1_converged = p1.converged;
            rep.family_size = family;
            rep.phase1_sample = p1.last_sample;
            rep.phase2_sample = fam.total;
            return rep;
        } catch (const DegenerateInputError&) {
            if (attempt >= 2) throw;  // jittered twice already, give up
        }
    }
}

PhiMax brute_force_phi_max(const std::vector<ConvexCore>& cores,
                           const FailureFunction& phi, std::size_t cells,
                           int refinements) {
    if (cores.empty()) throw ValidationError("need at least one site");
    double x0 = cores[0].vertices[0].x, x1 = x0;
    double y0 = cores[0].vertices[0].y, y1 = y0;
    for (const auto& c : cores)
        for (const auto& v : c.vertices) {
            x0 = std::min(x0, v.x);
            x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y);
            y1 = std::max(y1, v.y);
        }
    // the score only improves under projection onto the hull of the sites, so
    // the bounding box is enough
    PhiMax best{{x0, y0}, -1.0};
    for (int round = 0; round <= refinements; ++round) {
        double sx = (x1 - x0) / static_cast<double>(cells);
        double sy = (y1 - y0) / static_cast<double>(cells);
        PhiMax round_best{{x0, y0}, -1.0};
        for (std::size_t iy = 0; iy <= cells; ++iy) {
            for (std::size_t ix = 0; ix <= cells; ++ix) {
                Point q{x0 + sx * static_cast<double>(ix),
                        y0 + sy * static_cast<double>(iy)};
                double v = phi_point(phi, cores, q);
                if (v > round_best.value) round_best = {q, v};
            }
        }
        if (round_best.value > best.value) best = round_best;
        x0 = best.location.x - 2.0 * sx;
        x1 = best.location.x + 2.0 * sx;
        y0 = best.location.y - 2.0 * sy;
        y1 = best.location.y + 2.0 * sy;
    }
    return best;
}

}  // namespace mink
