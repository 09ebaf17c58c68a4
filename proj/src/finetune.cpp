#include "dac/finetune.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dac/geo.hpp"

namespace dac {

bool detect_busy(const Airport& airport, const AirportStats& stats,
                 const TimeWindow& window, const BusyThresholds& th) {
    const double hours = window.hours();
    if (hours <= 0) throw std::invalid_argument("detect_busy: window duration must be positive");
    if (airport.category == AirportCategory::Regional)
        return stats.delayed / hours > th.regional_delayed_per_hour;
    return stats.flights > 0 && stats.delay_ratio() >= th.large_medium_delay_ratio;
}

std::vector<std::string> rank_busy(const std::set<std::string>& busy,
                                   const WindowStats& stats, const Registry& registry) {
    std::vector<std::string> ranked(busy.begin(), busy.end());
    std::sort(ranked.begin(), ranked.end(), [&](const std::string& a, const std::string& b) {
        const auto& sa = stats.at(a);
        const auto& sb = stats.at(b);
        const auto key = [&](const Airport& ap, const AirportStats& s) {
            return std::make_tuple(ap.priority, s.delayed, s.delay_ratio(), s.flights);
        };
        const auto ka = key(registry.at(a), sa);
        const auto kb = key(registry.at(b), sb);
        if (ka != kb) return ka > kb;
        return a < b;
    });
    return ranked;
}

std::optional<std::string> select_partner(const std::string& busy, const WindowStats& stats,
                                          const Registry& registry,
                                          const std::set<std::string>& busy_set,
                                          const std::set<std::string>& already_paired,
                                          const BusyThresholds& th) {
    if (!busy_set.count(busy))
        throw std::invalid_argument("select_partner: " + busy + " is not in the busy set");
    const Airport& b = registry.at(busy);
    const AirportStats& bs = stats.at(busy);

    std::optional<std::string> best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const auto& cand : registry.airports) {
        if (cand.code == busy || busy_set.count(cand.code) || already_paired.count(cand.code))
            continue;
        const double dist = great_circle_nm(b, cand);
        if (dist > th.pairing_radius_nm) continue;
        const AirportStats& cs = stats.at(cand.code);
        const bool qualifies = cand.category == b.category
                                   ? cs.delayed < bs.delayed
                                   : cs.delay_ratio() < bs.delay_ratio();
        if (!qualifies) continue;
        if (dist < best_dist || (dist == best_dist && best && cand.code < *best)) {
            best_dist = dist;
            best = cand.code;
        }
    }
    return best;
}

Configuration fine_tune(const Clustering& clustering, const WindowStats& stats,
                        const Registry& registry, const TimeWindow& window,
                        const BusyThresholds& th) {
    std::set<std::string> busy_set;
    for (const auto& a : registry.airports)
        if (detect_busy(a, stats.at(a.code), window, th)) busy_set.insert(a.code);

    Configuration config;
    config.window = window;
    config.lambda_used = clustering.lambda_used;
    config.k = clustering.k;
    config.method = clustering.method;
    config.busy = rank_busy(busy_set, stats, registry);

    auto clusters = clustering.clusters();
    std::set<std::string> paired;

    for (const auto& code : config.busy) {
        const auto partner = select_partner(code, stats, registry, busy_set, paired, th);
        if (!partner) {
            config.unpaired_busy.push_back(code);
            continue;
        }
        // no other busy airport strictly inside the pair's enclosing circle
        const Airport& a = registry.at(code);
        const Airport& p = registry.at(*partner);
        const LatLon center = geodesic_midpoint({a.lat, a.lon}, {p.lat, p.lon});
        const double radius = great_circle_nm(a, p) / 2.0;
        bool blocked = false;
        for (const auto& other : busy_set) {
            if (other == code) continue;
            const Airport& o = registry.at(other);
            if (great_circle_nm({o.lat, o.lon}, center) < radius) { blocked = true; break; }
        }
        if (blocked) {
            config.unpaired_busy.push_back(code);
            continue;
        }

        for (auto& c : clusters) {
            std::erase(c, code);
            std::erase(c, *partner);
        }
        clusters.push_back({std::min(code, *partner), std::max(code, *partner)});
        config.pairs.emplace_back(code, *partner);
        paired.insert(code);
        paired.insert(*partner);
    }

    for (auto& c : clusters)
        if (!c.empty()) config.clusters.push_back(std::move(c));
    return config;
}

} // namespace dac
