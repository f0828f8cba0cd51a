#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mink/harness.hpp"
#include "mink/json_io.hpp"

namespace {

using namespace mink;

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(text)) {
        if (v < 1.0) throw ValidationError("sizes must be positive integers");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw ValidationError("expected a comma separated size list");
    return out;
}

Box parse_region(const std::string& text) {
    auto v = parse_double_list(text);
    if (v.size() != 4) throw ValidationError("region must be x0,y0,x1,y1");
    Box b{v[0], v[1], v[2], v[3]};
    if (!(b.width() > 0.0) || !(b.height() > 0.0))
        throw ValidationError("region must have positive width and height");
    return b;
}

GeneratorKind parse_kind(const std::string& text) {
    if (text == "segments") return GeneratorKind::segments;
    if (text == "polygons") return GeneratorKind::polygons;
    if (text == "adversarial") return GeneratorKind::adversarial;
    throw ValidationError("unknown generator kind: " + text);
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ValidationError("cannot open output file: " + out_path);
    f << payload;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open input file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<OffsetShape> shapes_from(const LoadedInstance& loaded) {
    if (loaded.radii.empty())
        throw ValidationError("instance document carries no radii");
    std::vector<OffsetShape> shapes;
    shapes.reserve(loaded.instance.cores.size());
    for (std::size_t i = 0; i < loaded.instance.cores.size(); ++i)
        shapes.push_back(offset(loaded.instance.cores[i], loaded.radii[i]));
    return shapes;
}

struct GenArgs {
    std::string kind = "segments";
    std::size_t n = 10;
    std::size_t arity = 4;
    std::uint64_t seed = 0;
    std::string region = "0,0,1,1";
    double max_len = 0.0;
    std::string radii;
    std::string out;
};

void run_gen(const GenArgs& a) {
    GeneratorKind kind = parse_kind(a.kind);
    if (kind == GeneratorKind::adversarial) {
        if (!a.radii.empty())
            throw ValidationError("the adversarial family carries its own radii");
        auto adv = gen_adversarial(a.n, a.seed);
        emit(instance_to_json(adv.instance, &adv.radii), a.out);
        return;
    }
    Box region = parse_region(a.region);
    Instance inst = kind == GeneratorKind::segments
                        ? gen_disjoint_segments(a.n, region, a.seed, a.max_len)
                        : gen_disjoint_polygons(a.n, a.arity, region, a.seed);
    if (a.radii.empty()) {
        emit(instance_to_json(inst), a.out);
        return;
    }
    RadiiModel model = parse_radii_spec(a.radii);
    Rng rng(derive_seed(a.seed, 1));
    auto radii = assign_radii(model, a.n, rng);
    emit(instance_to_json(inst, &radii), a.out);
}

struct ExperimentArgs {
    std::string n_values = "8,16,32";
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    std::string kind = "segments";
    std::size_t arity = 4;
    std::string region = "0,0,1,1";
    double max_len = 0.0;
    std::string radii;
    bool shuffle_adversarial = false;
    int level = 0;
    std::string out;
};

ExperimentConfig to_config(const ExperimentArgs& a) {
    ExperimentConfig cfg;
    cfg.n_values = parse_sizes(a.n_values);
    cfg.trials = a.trials;
    cfg.base_seed = a.seed;
    cfg.generator = parse_kind(a.kind);
    cfg.polygon_arity = a.arity;
    cfg.region = parse_region(a.region);
    cfg.max_len = a.max_len;
    if (!a.radii.empty()) cfg.radii = parse_radii_spec(a.radii);
    cfg.shuffle_adversarial = a.shuffle_adversarial;
    return cfg;
}

void run_union_experiment(const ExperimentArgs& a) {
    auto res = run_union_scaling(to_config(a));
    std::string payload = union_rows_csv(res);
    if (res.mean_psi.size() >= 2) {
        char line[96];
        std::snprintf(line, sizeof(line), "# fit slope=%.17g intercept=%.17g\n",
                      res.fit.slope, res.fit.intercept);
        payload += line;
    }
    emit(payload, a.out);
}

void run_shallow_experiment(const ExperimentArgs& a) {
    auto res = run_shallow_scaling(to_config(a), a.level);
    std::string payload = shallow_rows_csv(res);
    if (res.mean_shallow.size() >= 2) {
        char line[96];
        std::snprintf(line, sizeof(line), "# fit slope=%.17g intercept=%.17g\n",
                      res.fit.slope, res.fit.intercept);
        payload += line;
    }
    emit(payload, a.out);
}

struct DepthArgs {
    std::string input;
    int level = -1;
    std::string out;
};

void run_depth(const DepthArgs& a) {
    auto loaded = instance_from_json(slurp(a.input));
    auto shapes = shapes_from(loaded);
    auto rep = max_depth(shapes);
    std::size_t shallow =
        a.level >= 0 ? shallow_vertex_count(shapes, a.level) : 0;
    emit(depth_report_to_json(rep, a.level, shallow), a.out);
}

struct VulnArgs {
    std::string input;
    std::string phi = "exp:0.2";
    double delta = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

void run_vuln(const VulnArgs& a) {
    auto loaded = instance_from_json(slurp(a.input));
    auto rep = approx_most_vulnerable(loaded.instance.cores, parse_phi_spec(a.phi),
                                      a.delta, a.seed);
    emit(vuln_report_to_json(rep, a.delta, a.seed), a.out);
}

struct BenchArgs {
    std::string n_values = "5,10";
    std::size_t trials = 3;
    std::uint64_t seed = 0;
    double delta = 0.5;
    std::string phi = "exp:0.2";
    std::string region = "0,0,1,1";
    double max_len = 0.0;
    std::string out;
};

void run_bench(const BenchArgs& a) {
    VulnBenchConfig cfg;
    cfg.n_values = parse_sizes(a.n_values);
    cfg.trials = a.trials;
    cfg.base_seed = a.seed;
    cfg.delta = a.delta;
    cfg.phi = parse_phi_spec(a.phi);
    cfg.region = parse_region(a.region);
    cfg.max_len = a.max_len;
    auto res = run_vuln_bench(cfg);
    emit(vuln_bench_csv(res), a.out);
    for (const auto& row : res.rows) {  // timings are run-dependent: stderr only
        std::fprintf(stderr, "n=%llu trial=%llu approx_ms=%.3f grid_ms=%.3f\n",
                     static_cast<unsigned long long>(row.n),
                     static_cast<unsigned long long>(row.trial), row.approx_ms,
                     row.grid_ms);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"union and depth analysis for disk-grown convex sites"};
    app.require_subcommand(1);

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "generate an instance as JSON");
    gen->add_option("--kind", g.kind, "segments | polygons | adversarial");
    gen->add_option("--n", g.n, "number of sites")->required();
    gen->add_option("--arity", g.arity, "polygon vertex count");
    gen->add_option("--seed", g.seed, "random seed");
    gen->add_option("--region", g.region, "x0,y0,x1,y1");
    gen->add_option("--max-len", g.max_len, "segment length cap (0 = auto)");
    gen->add_option("--radii", g.radii,
                    "uniform:lo,hi | exp:rate | discrete:v,... | gauss:mu,sigma,cut | perm:r,...");
    gen->add_option("-o,--out", g.out, "output file (default stdout)");
    gen->callback([&] { run_gen(g); });

    ExperimentArgs u;
    auto* ue = app.add_subcommand("union-experiment",
                                  "union vertex scaling over instance sizes, CSV");
    ue->add_option("--n-values", u.n_values, "comma separated sizes");
    ue->add_option("--trials", u.trials, "trials per size");
    ue->add_option("--seed", u.seed, "base seed; trial seeds count up from it");
    ue->add_option("--kind", u.kind, "segments | polygons | adversarial");
    ue->add_option("--arity", u.arity, "polygon vertex count");
    ue->add_option("--region", u.region, "x0,y0,x1,y1");
    ue->add_option("--max-len", u.max_len, "segment length cap (0 = auto)");
    ue->add_option("--radii", u.radii, "radii model (see gen)");
    ue->add_flag("--shuffle-adversarial", u.shuffle_adversarial,
                 "permute the adversarial radii across cores");
    ue->add_option("-o,--out", u.out, "output file (default stdout)");
    ue->callback([&] { run_union_experiment(u); });

    ExperimentArgs sh;
    auto* she = app.add_subcommand("shallow", "low-level crossing counts, CSV");
    she->add_option("--n-values", sh.n_values, "comma separated sizes");
    she->add_option("--trials", sh.trials, "trials per size");
    she->add_option("--seed", sh.seed, "base seed");
    she->add_option("--kind", sh.kind, "segments | polygons | adversarial");
    she->add_option("--arity", sh.arity, "polygon vertex count");
    she->add_option("--region", sh.region, "x0,y0,x1,y1");
    she->add_option("--max-len", sh.max_len, "segment length cap (0 = auto)");
    she->add_option("--radii", sh.radii, "radii model (see gen)");
    she->add_option("--level", sh.level, "count crossings at most this deep")
        ->required();
    she->add_option("-o,--out", sh.out, "output file (default stdout)");
    she->callback([&] { run_shallow_experiment(sh); });

    DepthArgs d;
    auto* de = app.add_subcommand("depth", "max cover depth of a stored instance");
    de->add_option("-i,--input", d.input, "instance JSON with radii")->required();
    de->add_option("--level", d.level, "also count crossings at most this deep");
    de->add_option("-o,--out", d.out, "output file (default stdout)");
    de->callback([&] { run_depth(d); });

    VulnArgs v;
    auto* ve = app.add_subcommand("vuln", "most vulnerable location estimate");
    ve->add_option("-i,--input", v.input, "instance JSON (cores only used)")
        ->required();
    ve->add_option("--phi", v.phi, "exp:len | linear:reach | table:d,v,...");
    ve->add_option("--delta", v.delta, "additive accuracy target");
    ve->add_option("--seed", v.seed, "sampling seed");
    ve->add_option("-o,--out", v.out, "output file (default stdout)");
    ve->callback([&] { run_vuln(v); });

    BenchArgs b;
    auto* be = app.add_subcommand("vuln-bench",
                                  "estimator vs dense grid over random instances, CSV");
    be->add_option("--n-values", b.n_values, "comma separated sizes");
    be->add_option("--trials", b.trials, "trials per size");
    be->add_option("--seed", b.seed, "base seed");
    be->add_option("--delta", b.delta, "additive accuracy target");
    be->add_option("--phi", b.phi, "failure function (see vuln)");
    be->add_option("--region", b.region, "x0,y0,x1,y1");
    be->add_option("--max-len", b.max_len, "segment length cap (0 = auto)");
    be->add_option("-o,--out", b.out, "output file (default stdout)");
    be->callback([&] { run_bench(b); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
