#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dac/finetune.hpp"
#include "dac/types.hpp"

#include <json.hpp>

namespace dac {

struct ClusterMeans {
    double regular = 0.0;  // F_i: mean non-delayed departures per member
    double delayed = 0.0;  // D_i: mean delayed departures per member
    int members = 0;       // m_i
};

struct UnbalanceReport {
    std::vector<ClusterMeans> means;
    double s_regular = 0.0;  // sample variance of F_i over clusters
    double s_delayed = 0.0;  // sample variance of D_i over clusters
    int clusters = 0;

    nlohmann::json to_json() const;
};

struct ReductionReport {
    std::optional<double> regular_pct;  // undefined when the before-variance is 0
    std::optional<double> delayed_pct;

    nlohmann::json to_json() const;
};

// F_i = sum(f - d)/m_i, D_i = sum(d)/m_i per cluster. With
// regular_includes_delayed, F_i uses total f instead of f - d.
std::vector<ClusterMeans> cluster_means(const std::vector<std::vector<std::string>>& clusters,
                                        const WindowStats& stats,
                                        bool regular_includes_delayed = false);

// Sample variances (n-1 denominator) of the per-cluster means. Requires at
// least two clusters.
UnbalanceReport unbalance(const std::vector<ClusterMeans>& means);

ReductionReport reduction(const UnbalanceReport& before, const UnbalanceReport& after);

// The no-collaboration baseline: every registry airport its own cluster.
std::vector<std::vector<std::string>> singleton_clusters(const Registry& registry);

} // namespace dac
