// python bindings. Cores cross the boundary as plain vertex lists so callers
// never hold C++ objects; heavier results come back as dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mink/depth.hpp"
#include "mink/harness.hpp"
#include "mink/json_io.hpp"

namespace py = pybind11;
using namespace mink;

namespace {

using PyCore = std::vector<std::pair<double, double>>;

ConvexCore core_in(const PyCore& pts) {
    std::vector<Point> v;
    v.reserve(pts.size());
    for (auto [x, y] : pts) v.push_back({x, y});
    if (v.empty()) throw ValidationError("core needs at least one vertex");
    if (v.size() == 1) return make_point_core(v[0]);
    if (v.size() == 2) return make_segment_core(v[0], v[1]);
    return make_polygon_core(std::move(v));
}

std::vector<ConvexCore> cores_in(const std::vector<PyCore>& cores) {
    std::vector<ConvexCore> out;
    out.reserve(cores.size());
    for (const auto& c : cores) out.push_back(core_in(c));
    return out;
}

PyCore core_out(const ConvexCore& core) {
    PyCore pts;
    for (const auto& v : core.vertices) pts.emplace_back(v.x, v.y);
    return pts;
}

std::vector<OffsetShape> grow(const std::vector<PyCore>& cores,
                              const std::vector<double>& radii) {
    if (cores.size() != radii.size())
        throw ValidationError("radii count must match core count");
    std::vector<OffsetShape> shapes;
    shapes.reserve(cores.size());
    for (std::size_t i = 0; i < cores.size(); ++i)
        shapes.push_back(offset(core_in(cores[i]), radii[i]));
    return shapes;
}

Box box_in(const std::tuple<double, double, double, double>& r) {
    Box b{std::get<0>(r), std::get<1>(r), std::get<2>(r), std::get<3>(r)};
    if (!(b.width() > 0.0) || !(b.height() > 0.0))
        throw ValidationError("region must have positive width and height");
    return b;
}

py::dict instance_out(const Instance& inst, const std::vector<double>* radii) {
    py::list cores;
    for (const auto& c : inst.cores) cores.append(core_out(c));
    py::dict d;
    d["cores"] = cores;
    d["seed"] = inst.seed;
    d["generator"] = inst.generator;
    if (radii) d["radii"] = *radii;
    return d;
}

}  // namespace

PYBIND11_MODULE(_minkunion, m) {
    m.doc() = "union structure, cover depth and vulnerability scoring for "
              "disk-grown convex sites";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                                 PyExc_RuntimeError);

    m.def(
        "generate",
        [](const std::string& kind, std::size_t n, std::uint64_t seed,
           std::size_t arity, std::tuple<double, double, double, double> region,
           double max_len) {
            Box b = box_in(region);
            if (kind == "segments")
                return instance_out(gen_disjoint_segments(n, b, seed, max_len),
                                    nullptr);
            if (kind == "polygons")
                return instance_out(gen_disjoint_polygons(n, arity, b, seed), nullptr);
            if (kind == "adversarial") {
                auto adv = gen_adversarial(n, seed);
                return instance_out(adv.instance, &adv.radii);
            }
            throw ValidationError("unknown generator kind: " + kind);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("arity") = 4,
        py::arg("region") = std::make_tuple(0.0, 0.0, 1.0, 1.0),
        py::arg("max_len") = 0.0,
        "Random disjoint cores; kind is segments | polygons | adversarial. "
        "Returns a dict with cores (vertex lists), seed, generator and, for "
        "the adversarial family, the radii that realize its quadratic union.");

    m.def(
        "assign_radii",
        [](const std::string& spec, std::size_t n, std::uint64_t seed) {
            Rng rng(seed);
            return assign_radii(parse_radii_spec(spec), n, rng);
        },
        py::arg("spec"), py::arg("n"), py::arg("seed") = 0,
        "Draw n radii from a spec like uniform:0.05,0.15, exp:8, "
        "discrete:..., gauss:mu,sigma,cut or perm:r1,r2,...");

    m.def(
        "union_stats",
        [](const std::vector<PyCore>& cores, const std::vector<double>& radii) {
            auto stats = union_stats(grow(cores, radii));
            py::dict d;
            d["n"] = stats.n;
            d["cc"] = stats.cc;
            d["rr"] = stats.rr;
            d["cr"] = stats.cr;
            d["shape_vertices"] = stats.shape_vertices;
            d["rr_terminal"] = stats.rr_terminal;
            d["psi"] = stats.psi;
            return d;
        },
        py::arg("cores"), py::arg("radii"),
        "Vertex census of the union boundary of the grown sites.");

    m.def(
        "union_vertex_points",
        [](const std::vector<PyCore>& cores, const std::vector<double>& radii) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& v : union_vertices(grow(cores, radii)))
                pts.emplace_back(v.p.x, v.p.y);
            return pts;
        },
        py::arg("cores"), py::arg("radii"),
        "Positions of every vertex on the union boundary.");

    m.def(
        "depth_at",
        [](const std::vector<PyCore>& cores, const std::vector<double>& radii,
           std::pair<double, double> q) {
            return depth(grow(cores, radii), Point{q.first, q.second});
        },
        py::arg("cores"), py::arg("radii"), py::arg("q"),
        "Number of grown sites strictly containing q.");

    m.def(
        "max_depth",
        [](const std::vector<PyCore>& cores, const std::vector<double>& radii) {
            auto rep = max_depth(grow(cores, radii));
            py::dict d;
            d["depth"] = rep.value;
            d["witness"] = std::make_pair(rep.witness.x, rep.witness.y);
            return d;
        },
        py::arg("cores"), py::arg("radii"),
        "Exact maximum cover depth and a point attaining it.");

    m.def(
        "shallow_count",
        [](const std::vector<PyCore>& cores, const std::vector<double>& radii,
           int level) { return shallow_vertex_count(grow(cores, radii), level); },
        py::arg("cores"), py::arg("radii"), py::arg("level"),
        "Boundary crossings covered by at most `level` other sites.");

    m.def(
        "phi_at",
        [](const std::vector<PyCore>& cores, const std::string& phi,
           std::pair<double, double> q) {
            return phi_point(parse_phi_spec(phi), cores_in(cores),
                             Point{q.first, q.second});
        },
        py::arg("cores"), py::arg("phi"), py::arg("q"),
        "Total failure score at q; phi is exp:efold | linear:reach | "
        "table:d1,v1,...");

    m.def(
        "most_vulnerable",
        [](const std::vector<PyCore>& cores, const std::string& phi, double delta,
           std::uint64_t seed) {
            auto rep = approx_most_vulnerable(cores_in(cores), parse_phi_spec(phi),
                                              delta, seed);
            py::dict d;
            d["location"] = std::make_pair(rep.location.x, rep.location.y);
            d["phi_at_location"] = rep.phi_at_location;
            d["phi_estimate"] = rep.phi_estimate;
            d["rho_estimate"] = rep.rho_estimate;
            d["phase1_steps"] = rep.phase1_steps;
            d["phase1_converged"] = rep.phase1_converged;
            d["family_size"] = rep.family_size;
            d["phase1_sample"] = rep.phase1_sample;
            d["phase2_sample"] = rep.phase2_sample;
            d["exhaustive"] = rep.exhaustive;
            return d;
        },
        py::arg("cores"), py::arg("phi"), py::arg("delta") = 0.5,
        py::arg("seed") = 0,
        "Randomized search for the point of highest total failure score, "
        "within additive delta with high probability.");

    m.def(
        "grid_phi_max",
        [](const std::vector<PyCore>& cores, const std::string& phi,
           std::size_t cells, int refinements) {
            auto best = brute_force_phi_max(cores_in(cores), parse_phi_spec(phi),
                                            cells, refinements);
            py::dict d;
            d["location"] = std::make_pair(best.location.x, best.location.y);
            d["value"] = best.value;
            return d;
        },
        py::arg("cores"), py::arg("phi"), py::arg("cells") = 160,
        py::arg("refinements") = 2,
        "Dense grid reference maximum of the total failure score.");
}
