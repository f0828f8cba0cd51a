#pragma once

#include <string>
#include <vector>

#include "mink/depth.hpp"
#include "mink/models.hpp"
#include "mink/union_analysis.hpp"
#include "mink/vulnerability.hpp"

namespace mink {

// JSON document shapes:
//   instance: {"n": ..., "seed": ..., "generator": "...",
//              "cores": [{"vertices": [[x, y], ...]}, ...],
//              "radii": [...]}            (radii optional)
// Text renderings sort keys, so equal inputs give byte-equal output.

struct LoadedInstance {
    Instance instance;
    std::vector<double> radii;  // empty when the document carries none
};

std::string instance_to_json(const Instance& inst,
                             const std::vector<double>* radii = nullptr);
LoadedInstance instance_from_json(const std::string& text);

std::string union_stats_to_json(const UnionStats& stats);
// level < 0 leaves the shallow-count fields out
std::string depth_report_to_json(const DepthReport& rep, int level = -1,
                                 std::size_t shallow = 0);
std::string vuln_report_to_json(const VulnReport& rep, double delta,
                                std::uint64_t seed);

// kind:args text specs shared by the command line tool and the python module
std::vector<double> parse_double_list(const std::string& text);
// uniform:lo,hi | exp:rate | discrete:v1,v2,... | gauss:mu,sigma,cut | perm:r1,r2,...
RadiiModel parse_radii_spec(const std::string& text);
// exp:efold | linear:reach | table:d1,v1,d2,v2,...
FailureFunction parse_phi_spec(const std::string& text);

}  // namespace mink
