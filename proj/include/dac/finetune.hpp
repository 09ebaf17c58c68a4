#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dac/cluster.hpp"
#include "dac/types.hpp"

namespace dac {

struct BusyThresholds {
    double regional_delayed_per_hour = 2.0;
    double large_medium_delay_ratio = 0.30;
    double pairing_radius_nm = 100.0;
};

// Regional: busy iff delayed flights per window-hour strictly exceed the
// threshold. Medium/Large: busy iff the in-window delay ratio reaches the
// threshold (inclusive).
bool detect_busy(const Airport& airport, const AirportStats& stats,
                 const TimeWindow& window, const BusyThresholds& th);

// Descending by (priority, delayed, delay ratio, flights); ties by code.
std::vector<std::string> rank_busy(const std::set<std::string>& busy,
                                   const WindowStats& stats, const Registry& registry);

// Closest airport within pairing_radius_nm that is non-busy, unpaired, and
// strictly less loaded than the busy airport (same category: fewer delayed
// flights; different category: lower delay ratio).
std::optional<std::string> select_partner(const std::string& busy, const WindowStats& stats,
                                          const Registry& registry,
                                          const std::set<std::string>& busy_set,
                                          const std::set<std::string>& already_paired,
                                          const BusyThresholds& th);

struct Configuration {
    TimeWindow window;
    std::vector<std::vector<std::string>> clusters;         // partition of the registry
    std::vector<std::pair<std::string, std::string>> pairs; // (busy, partner)
    std::vector<std::string> busy;                          // all busy airports, ranked
    std::vector<std::string> unpaired_busy;                 // flagged as needing further separation
    double lambda_used = 0.0;
    int k = 0;
    EmbeddingMethod method = EmbeddingMethod::Spectral;
};

// Pairs busy airports with assistants in rank order. A pair is rejected when
// another busy airport lies strictly inside the minimal enclosing circle of
// the two (center = geodesic midpoint, radius = half their distance). Paired
// airports are moved into a dedicated two-member cluster; empty clusters are
// dropped and ids renumbered densely.
Configuration fine_tune(const Clustering& clustering, const WindowStats& stats,
                        const Registry& registry, const TimeWindow& window,
                        const BusyThresholds& th);

} // namespace dac
