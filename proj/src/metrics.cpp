#include "dac/metrics.hpp"

#include <stdexcept>

namespace dac {

std::vector<ClusterMeans> cluster_means(const std::vector<std::vector<std::string>>& clusters,
                                        const WindowStats& stats,
                                        bool regular_includes_delayed) {
    std::vector<ClusterMeans> out;
    out.reserve(clusters.size());
    for (const auto& cluster : clusters) {
        if (cluster.empty()) throw std::invalid_argument("cluster_means: empty cluster");
        ClusterMeans m;
        m.members = static_cast<int>(cluster.size());
        for (const auto& code : cluster) {
            auto it = stats.find(code);
            if (it == stats.end())
                throw std::invalid_argument("cluster_means: no stats for " + code);
            m.regular += regular_includes_delayed ? it->second.flights
                                                  : it->second.flights - it->second.delayed;
            m.delayed += it->second.delayed;
        }
        m.regular /= m.members;
        m.delayed /= m.members;
        out.push_back(m);
    }
    return out;
}

UnbalanceReport unbalance(const std::vector<ClusterMeans>& means) {
    const int n = static_cast<int>(means.size());
    if (n < 2)
        throw std::invalid_argument("unbalance: variance needs at least two clusters");

    double mean_f = 0.0, mean_d = 0.0;
    for (const auto& m : means) {
        mean_f += m.regular;
        mean_d += m.delayed;
    }
    mean_f /= n;
    mean_d /= n;

    UnbalanceReport rep;
    rep.means = means;
    rep.clusters = n;
    for (const auto& m : means) {
        rep.s_regular += (m.regular - mean_f) * (m.regular - mean_f);
        rep.s_delayed += (m.delayed - mean_d) * (m.delayed - mean_d);
    }
    rep.s_regular /= n - 1;
    rep.s_delayed /= n - 1;
    return rep;
}

ReductionReport reduction(const UnbalanceReport& before, const UnbalanceReport& after) {
    ReductionReport rep;
    if (before.s_regular > 0)
        rep.regular_pct = 100.0 * (before.s_regular - after.s_regular) / before.s_regular;
    if (before.s_delayed > 0)
        rep.delayed_pct = 100.0 * (before.s_delayed - after.s_delayed) / before.s_delayed;
    return rep;
}

std::vector<std::vector<std::string>> singleton_clusters(const Registry& registry) {
    std::vector<std::vector<std::string>> out;
    for (const auto& a : registry.airports) out.push_back({a.code});
    return out;
}

nlohmann::json UnbalanceReport::to_json() const {
    nlohmann::json means_json = nlohmann::json::array();
    for (const auto& m : means)
        means_json.push_back({{"regular", m.regular}, {"delayed", m.delayed}, {"members", m.members}});
    return nlohmann::json{{"cluster_means", means_json},
                          {"s_regular", s_regular},
                          {"s_delayed", s_delayed},
                          {"clusters", clusters}};
}

nlohmann::json ReductionReport::to_json() const {
    nlohmann::json j;
    j["regular_pct"] = regular_pct ? nlohmann::json(*regular_pct) : nlohmann::json();
    j["delayed_pct"] = delayed_pct ? nlohmann::json(*delayed_pct) : nlohmann::json();
    return j;
}

} // namespace dac
