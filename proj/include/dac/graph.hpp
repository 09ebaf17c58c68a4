#pragma once

#include <string>
#include <vector>

#include "dac/geo.hpp"
#include "dac/types.hpp"

#include <json.hpp>

namespace dac {

struct KernelParams {
    double base = 0.99;    // B in (0,1)
    double shift = 300.0;
    double lambda = 0.0;   // geographical weight, [0, 0.5]

    void validate() const;
};

// Combined delay ratio of two connected airports, in [0,1]. Defined as 0
// when neither airport has any flights.
double pair_load(const AirportStats& a, const AirportStats& b);

// w = B^((1-lambda) * (100*load) + lambda * d_nm - shift). Strictly positive;
// decreasing in load and (for lambda > 0) in distance.
double edge_weight(double load, double distance_nm, const KernelParams& params);

struct HybridGraph {
    AdjacencyGraph graph;                     // same nodes/edges as the IAG
    std::vector<std::vector<double>> matrix;  // symmetric, zero diagonal; 0 = no edge
    KernelParams params;
    std::size_t stats_fingerprint = 0;

    std::size_t size() const { return graph.nodes.size(); }
    nlohmann::json to_json() const;
};

HybridGraph build_hag(const AdjacencyGraph& iag, const WindowStats& stats,
                      const Registry& registry, const KernelParams& params);

} // namespace dac
