#include "dac/graph.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace dac {

void KernelParams::validate() const {
    if (!(base > 0.0 && base < 1.0))
        throw std::invalid_argument("kernel base must be in (0,1)");
    if (lambda < 0.0 || lambda > 0.5)
        throw std::invalid_argument("kernel lambda must be in [0, 0.5]");
}

double pair_load(const AirportStats& a, const AirportStats& b) {
    const int f = a.flights + b.flights;
    if (f == 0) return 0.0;
    return static_cast<double>(a.delayed + b.delayed) / f;
}

double edge_weight(double load, double distance_nm, const KernelParams& params) {
    const double exponent = (1.0 - params.lambda) * (100.0 * load) +
                            params.lambda * distance_nm - params.shift;
    const double w = std::pow(params.base, exponent);
    if (!std::isfinite(w) || w <= 0.0)
        throw std::runtime_error("edge_weight: non-finite weight");
    return w;
}

HybridGraph build_hag(const AdjacencyGraph& iag, const WindowStats& stats,
                      const Registry& registry, const KernelParams& params) {
    params.validate();
    const std::size_t n = iag.nodes.size();

    HybridGraph hag;
    hag.graph = iag;
    hag.params = params;
    hag.matrix.assign(n, std::vector<double>(n, 0.0));

    std::size_t fp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!stats.count(iag.nodes[i]))
            throw std::invalid_argument("build_hag: no stats for airport " + iag.nodes[i]);
        const auto& s = stats.at(iag.nodes[i]);
        fp = fp * 1000003u + std::hash<int>{}(s.flights * 4096 + s.delayed);
    }
    hag.stats_fingerprint = fp;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!iag.has_edge(iag.nodes[i], iag.nodes[j])) continue;
            const Airport& ai = registry.at(iag.nodes[i]);
            const Airport& aj = registry.at(iag.nodes[j]);
            const double load = pair_load(stats.at(ai.code), stats.at(aj.code));
            const double w = edge_weight(load, great_circle_nm(ai, aj), params);
            hag.matrix[i][j] = hag.matrix[j][i] = w;
        }
    }
    return hag;
}

nlohmann::json HybridGraph::to_json() const {
    return nlohmann::json{{"nodes", graph.nodes},
                          {"matrix", matrix},
                          {"lambda", params.lambda},
                          {"B", params.base}};
}

} // namespace dac
