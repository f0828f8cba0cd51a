#include "mink/json_io.hpp"

#include "json.hpp"

namespace mink {

namespace {

using nlohmann::json;

json core_to_json(const ConvexCore& core) {
    json verts = json::array();
    for (const auto& v : core.vertices) verts.push_back(json::array({v.x, v.y}));
    return json{{"vertices", verts}};
}

ConvexCore core_from_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ValidationError("core document needs a vertices array");
    std::vector<Point> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw ValidationError("core vertices must be [x, y] pairs");
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    if (pts.size() == 1) return make_point_core(pts[0]);
    if (pts.size() == 2) return make_segment_core(pts[0], pts[1]);
    return make_polygon_core(pts);
}

}  // namespace

std::string instance_to_json(const Instance& inst, const std::vector<double>* radii) {
    json cores = json::array();
    for (const auto& c : inst.cores) cores.push_back(core_to_json(c));
    json doc{{"n", inst.cores.size()},
             {"seed", inst.seed},
             {"generator", inst.generator},
             {"cores", cores}};
    if (radii) {
        if (radii->size() != inst.cores.size())
            throw ValidationError("radii count must match core count");
        doc["radii"] = *radii;
    }
    return doc.dump(2) + "\n";
}

LoadedInstance instance_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("bad instance document: ") + e.what());
    }
    if (!doc.contains("cores") || !doc["cores"].is_array())
        throw ValidationError("instance document needs a cores array");
    LoadedInstance out;
    for (const auto& c : doc["cores"]) out.instance.cores.push_back(core_from_json(c));
    out.instance.seed = doc.value("seed", std::uint64_t{0});
    out.instance.generator = doc.value("generator", std::string{});
    if (doc.contains("radii")) {
        for (const auto& r : doc["radii"]) {
            double v = r.get<double>();
            if (v < 0.0) throw ValidationError("radii must be non-negative");
            out.radii.push_back(v);
        }
        if (out.radii.size() != out.instance.cores.size())
            throw ValidationError("radii count must match core count");
    }
    return out;
}

std::string union_stats_to_json(const UnionStats& stats) {
    json doc{{"n", stats.n},
             {"cc", stats.cc},
             {"rr", stats.rr},
             {"cr", stats.cr},
             {"shape_vertices", stats.shape_vertices},
             {"rr_terminal", stats.rr_terminal},
             {"psi", stats.psi}};
    return doc.dump(2) + "\n";
}

std::string depth_report_to_json(const DepthReport& rep, int level,
                                 std::size_t shallow) {
    json doc{{"max_depth", rep.value},
             {"witness", json::array({rep.witness.x, rep.witness.y})}};
    if (level >= 0) {
        doc["level"] = level;
        doc["shallow_vertices"] = shallow;
    }
    return doc.dump(2) + "\n";
}

std::string vuln_report_to_json(const VulnReport& rep, double delta,
                                std::uint64_t seed) {
    json doc{{"location", json::array({rep.location.x, rep.location.y})},
             {"phi_at_location", rep.phi_at_location},
             {"phi_estimate", rep.phi_estimate},
             {"rho_estimate", rep.rho_estimate},
             {"phase1_steps", rep.phase1_steps},
             {"phase1_converged", rep.phase1_converged},
             {"family_size", rep.family_size},
             {"phase1_sample", rep.phase1_sample},
             {"phase2_sample", rep.phase2_sample},
             {"exhaustive", rep.exhaustive},
             {"delta", delta},
             {"seed", seed}};
    return doc.dump(2) + "\n";
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        if (!item.empty()) {
            try {
                std::size_t used = 0;
                double v = std::stod(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                out.push_back(v);
            } catch (const std::exception&) {
                throw ValidationError("bad number in list: " + item);
            }
        }
        pos = comma + 1;
    }
    return out;
}

RadiiModel parse_radii_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("radii model needs kind:args, e.g. uniform:0.05,0.15");
    std::string kind = text.substr(0, colon);
    auto args = parse_double_list(text.substr(colon + 1));
    if (kind == "uniform") {
        if (args.size() != 2 || args[0] > args[1])
            throw ValidationError("uniform radii need lo,hi with lo <= hi");
        return DensityModel{DistributionSpec::make_uniform(args[0], args[1])};
    }
    if (kind == "exp") {
        if (args.size() != 1 || args[0] <= 0.0)
            throw ValidationError("exponential radii need a positive rate");
        return DensityModel{DistributionSpec::make_exponential(args[0])};
    }
    if (kind == "discrete") {
        if (args.empty()) throw ValidationError("discrete radii need values");
        return DensityModel{DistributionSpec::make_discrete(args)};
    }
    if (kind == "gauss") {
        if (args.size() != 3 || args[1] <= 0.0)
            throw ValidationError("gaussian radii need mu,sigma,cut with sigma > 0");
        return DensityModel{
            DistributionSpec::make_truncated_gaussian(args[0], args[1], args[2])};
    }
    if (kind == "perm") {
        if (args.empty()) throw ValidationError("permutation radii need values");
        return PermutationModel{args};
    }
    throw ValidationError("unknown radii model kind: " + kind);
}

FailureFunction parse_phi_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("failure function needs kind:args, e.g. exp:0.2");
    std::string kind = text.substr(0, colon);
    auto args = parse_double_list(text.substr(colon + 1));
    if (kind == "exp") {
        if (args.size() != 1) throw ValidationError("exp failure needs one length");
        return FailureFunction::make_exponential(args[0]);
    }
    if (kind == "linear") {
        if (args.size() != 1) throw ValidationError("linear failure needs one reach");
        return FailureFunction::make_linear(args[0]);
    }
    if (kind == "table") {
        if (args.size() < 2 || args.size() % 2 != 0)
            throw ValidationError("table failure needs distance,value pairs");
        std::vector<std::pair<double, double>> knots;
        for (std::size_t i = 0; i < args.size(); i += 2)
            knots.emplace_back(args[i], args[i + 1]);
        return FailureFunction::make_table(std::move(knots));
    }
    throw ValidationError("unknown failure function kind: " + kind);
}

}  // namespace mink
