#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dac/cluster.hpp"
#include "dac/finetune.hpp"
#include "dac/ingest.hpp"
#include "dac/metrics.hpp"

#include <json.hpp>

namespace dac {

struct RunManifest {
    std::string flights_path;
    std::string registry_path;
    std::vector<std::string> dates;     // "YYYY-MM-DD"
    std::vector<std::string> windows;   // "HH:MM-HH:MM"
    EmbeddingMethod method = EmbeddingMethod::Spectral;
    int delay_threshold_min = 15;
    double azimuth_width_deg = 120.0;
    double max_range_nm = 200.0;
    double sector_anchor_deg = 15.0;
    KernelParams kernel;
    AdaptiveParams adaptive;
    BusyThresholds busy;
    std::uint64_t seed = 1;
    bool regular_includes_delayed = false;

    nlohmann::json to_json() const;
};

TimeWindow parse_window_spec(const std::string& date, const std::string& hhmm_range);

struct WindowResult {
    TimeWindow window;
    Configuration config;
    UnbalanceReport before;  // singleton baseline
    UnbalanceReport after;
    ReductionReport reduction;
    WindowStats stats;
    std::vector<RoundTrace> trace;

    nlohmann::json configuration_json(const RunManifest& manifest) const;
    nlohmann::json report_json(const RunManifest& manifest) const;
};

// One full window: stats -> adaptive clustering -> fine-tuning -> metrics.
WindowResult run_window(const std::vector<FlightRecord>& records, const Registry& registry,
                        const AdjacencyGraph& iag, const TimeWindow& window,
                        const RunManifest& manifest);

struct SweepResult {
    std::vector<WindowResult> windows;  // date-major order of the manifest lists
    std::map<std::string, int> pair_counts;          // "AAA-BBB" (sorted codes) -> count
    std::map<std::string, int> unpaired_busy_counts; // code -> count

    std::string summary_table() const;
    nlohmann::json summary_json(const RunManifest& manifest) const;
};

// Runs every date x window combination; windows are independent, so they may
// run concurrently (jobs > 1) with output identical to the sequential order.
SweepResult run_sweep(const RunManifest& manifest, int jobs = 1);

nlohmann::json export_geojson(const Configuration& config, const WindowStats& stats,
                              const Registry& registry);

} // namespace dac
