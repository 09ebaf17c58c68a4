#include "dac/pipeline.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dac/geo.hpp"

namespace dac {

TimeWindow parse_window_spec(const std::string& date, const std::string& hhmm_range) {
    int h1, m1, h2, m2;
    if (std::sscanf(hhmm_range.c_str(), "%d:%d-%d:%d", &h1, &m1, &h2, &m2) != 4)
        throw std::invalid_argument("bad window spec (want HH:MM-HH:MM): " + hhmm_range);
    TimeWindow w;
    w.date = parse_date(date);
    w.start = h1 * 60 + m1;
    w.end = h2 * 60 + m2;
    if (w.start >= w.end)
        throw std::invalid_argument("window start must precede end: " + hhmm_range);
    return w;
}

nlohmann::json RunManifest::to_json() const {
    return nlohmann::json{
        {"flights", flights_path},
        {"registry", registry_path},
        {"dates", dates},
        {"windows", windows},
        {"method", to_string(method)},
        {"delay_threshold_min", delay_threshold_min},
        {"azimuth_width_deg", azimuth_width_deg},
        {"max_range_nm", max_range_nm},
        {"sector_anchor_deg", sector_anchor_deg},
        {"kernel", {{"base", kernel.base}, {"shift", kernel.shift}}},
        {"adaptive",
         {{"max_cluster_size", adaptive.max_cluster_size},
          {"max_diameter_nm", adaptive.max_diameter_nm},
          {"lambda_step", adaptive.lambda_step},
          {"lambda_cap", adaptive.lambda_cap},
          {"ae_latent_dim", adaptive.ae_latent_dim},
          {"ae_epochs", adaptive.ae_train.epochs},
          {"ae_step_size", adaptive.ae_train.step_size}}},
        {"busy",
         {{"regional_delayed_per_hour", busy.regional_delayed_per_hour},
          {"large_medium_delay_ratio", busy.large_medium_delay_ratio},
          {"pairing_radius_nm", busy.pairing_radius_nm}}},
        {"seed", seed},
        {"regular_includes_delayed", regular_includes_delayed}};
}

WindowResult run_window(const std::vector<FlightRecord>& records, const Registry& registry,
                        const AdjacencyGraph& iag, const TimeWindow& window,
                        const RunManifest& manifest) {
    WindowResult res;
    res.window = window;
    res.stats = window_stats(records, window, registry).stats;

    Clustering clustering = adaptive_configure(
        iag, res.stats, registry, manifest.kernel, manifest.adaptive, manifest.method,
        manifest.seed, [&](const RoundTrace& t) { res.trace.push_back(t); });

    res.config = fine_tune(clustering, res.stats, registry, window, manifest.busy);

    res.before = unbalance(
        cluster_means(singleton_clusters(registry), res.stats, manifest.regular_includes_delayed));
    res.after = unbalance(
        cluster_means(res.config.clusters, res.stats, manifest.regular_includes_delayed));
    res.reduction = reduction(res.before, res.after);
    return res;
}

namespace {

std::string window_label(const TimeWindow& w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02d:%02d-%02d:%02d", w.start / 60, w.start % 60,
                  w.end / 60, w.end % 60);
    return to_string(w.date) + " " + buf;
}

} // namespace

nlohmann::json WindowResult::configuration_json(const RunManifest& manifest) const {
    nlohmann::json clusters_json = nlohmann::json::array();
    for (std::size_t i = 0; i < config.clusters.size(); ++i)
        clusters_json.push_back({{"id", i}, {"members", config.clusters[i]}});

    nlohmann::json pairs_json = nlohmann::json::array();
    for (const auto& [busy, partner] : config.pairs)
        pairs_json.push_back({{"busy", busy}, {"partner", partner}});

    nlohmann::json stats_json;
    for (const auto& [code, s] : stats)
        stats_json[code] = {{"f", s.flights}, {"d", s.delayed}};

    return nlohmann::json{{"manifest", manifest.to_json()},
                          {"window", window_label(window)},
                          {"clusters", clusters_json},
                          {"pairs", pairs_json},
                          {"busy", config.busy},
                          {"unpaired_busy", config.unpaired_busy},
                          {"lambda_used", config.lambda_used},
                          {"k", config.k},
                          {"stats", stats_json}};
}

nlohmann::json WindowResult::report_json(const RunManifest& manifest) const {
    return nlohmann::json{{"manifest", manifest.to_json()},
                          {"window", window_label(window)},
                          {"before", before.to_json()},
                          {"after", after.to_json()},
                          {"reduction", reduction.to_json()}};
}

SweepResult run_sweep(const RunManifest& manifest, int jobs) {
    if (manifest.dates.empty() || manifest.windows.empty())
        throw std::invalid_argument("run_sweep: at least one date and one window required");

    const Registry registry = load_registry(manifest.registry_path);
    const FlightData flights =
        load_flight_csv(manifest.flights_path, FlightSchema{}, manifest.delay_threshold_min);
    const AdjacencyGraph iag = build_iag(registry, manifest.azimuth_width_deg,
                                         manifest.max_range_nm, manifest.sector_anchor_deg);

    std::vector<TimeWindow> windows;
    for (const auto& d : manifest.dates)
        for (const auto& w : manifest.windows) windows.push_back(parse_window_spec(d, w));

    SweepResult sweep;
    sweep.windows.resize(windows.size());
    std::vector<std::string> failures(windows.size());

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(windows.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            sweep.windows[i] = run_window(flights.records, registry, iag, windows[i], manifest);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < windows.size(); ++i)
        if (!failures[i].empty())
            throw std::runtime_error("sweep failed at " + window_label(windows[i]) + ": " +
                                     failures[i]);

    for (const auto& wr : sweep.windows) {
        for (const auto& [busy, partner] : wr.config.pairs)
            ++sweep.pair_counts[std::min(busy, partner) + "-" + std::max(busy, partner)];
        for (const auto& code : wr.config.unpaired_busy) ++sweep.unpaired_busy_counts[code];
    }
    return sweep;
}

std::string SweepResult::summary_table() const {
    std::ostringstream out;
    out << "window                     regular%    delayed%\n";
    for (const auto& wr : windows) {
        char line[96];
        const auto fmt = [](const std::optional<double>& v) {
            char buf[16];
            if (v) std::snprintf(buf, sizeof(buf), "%8.2f", *v);
            else std::snprintf(buf, sizeof(buf), "%8s", "n/a");
            return std::string(buf);
        };
        std::snprintf(line, sizeof(line), "%-24s %s    %s\n", window_label(wr.window).c_str(),
                      fmt(wr.reduction.regular_pct).c_str(), fmt(wr.reduction.delayed_pct).c_str());
        out << line;
    }
    return out.str();
}

nlohmann::json SweepResult::summary_json(const RunManifest& manifest) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& wr : windows)
        rows.push_back({{"window", window_label(wr.window)},
                        {"reduction", wr.reduction.to_json()},
                        {"pairs", wr.config.pairs},
                        {"unpaired_busy", wr.config.unpaired_busy}});
    return nlohmann::json{{"manifest", manifest.to_json()},
                          {"rows", rows},
                          {"pair_counts", pair_counts},
                          {"unpaired_busy_counts", unpaired_busy_counts}};
}

nlohmann::json export_geojson(const Configuration& config, const WindowStats& stats,
                              const Registry& registry) {
    nlohmann::json features = nlohmann::json::array();

    std::map<std::string, int> cluster_of;
    for (std::size_t i = 0; i < config.clusters.size(); ++i)
        for (const auto& code : config.clusters[i]) cluster_of[code] = static_cast<int>(i);
    std::set<std::string> busy(config.busy.begin(), config.busy.end());

    for (const auto& a : registry.airports) {
        const auto& s = stats.at(a.code);
        features.push_back(
            {{"type", "Feature"},
             {"geometry", {{"type", "Point"}, {"coordinates", {a.lon, a.lat}}}},
             {"properties",
              {{"code", a.code},
               {"cluster", cluster_of.count(a.code) ? cluster_of.at(a.code) : -1},
               {"busy", busy.count(a.code) > 0},
               {"f", s.flights},
               {"d", s.delayed}}}});
    }
    for (const auto& [b, p] : config.pairs) {
        const Airport& ab = registry.at(b);
        const Airport& ap = registry.at(p);
        features.push_back(
            {{"type", "Feature"},
             {"geometry",
              {{"type", "LineString"},
               {"coordinates", {{ab.lon, ab.lat}, {ap.lon, ap.lat}}}}},
             {"properties", {{"busy", b}, {"partner", p}}}});
    }
    return nlohmann::json{{"type", "FeatureCollection"}, {"features", features}};
}

} // namespace dac
