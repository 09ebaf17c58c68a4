#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dac/types.hpp"

namespace dac {

// Maps logical field names to CSV column names. Defaults follow the 2015
// U.S. BTS on-time performance export.
struct FlightSchema {
    std::string year = "YEAR";
    std::string month = "MONTH";
    std::string day = "DAY";
    std::string airline = "AIRLINE";
    std::string origin = "ORIGIN_AIRPORT";
    std::string destination = "DESTINATION_AIRPORT";
    std::string scheduled_departure = "SCHEDULED_DEPARTURE";  // HHMM
    std::string departure_delay = "DEPARTURE_DELAY";          // minutes, signed
    std::string cancelled = "CANCELLED";                      // 0/1
    std::string diverted = "DIVERTED";                        // 0/1
};

struct ParseReport {
    std::size_t accepted = 0;
    std::size_t cancelled_or_diverted = 0;
    std::size_t rejected = 0;  // unparseable / missing required fields
};

struct FlightData {
    std::vector<FlightRecord> records;
    ParseReport report;
};

// Parses delimiter-separated flight data with a header row. Cancelled or
// diverted rows are dropped; unparseable rows are tallied, never fatal.
// A header missing a required column throws with the column name.
FlightData parse_flight_records(std::istream& source, const FlightSchema& schema,
                                int delay_threshold_min);

FlightData load_flight_csv(const std::string& path, const FlightSchema& schema,
                           int delay_threshold_min);

struct WindowStatsResult {
    WindowStats stats;
    std::size_t unknown_origins = 0;  // records whose origin is not in the registry
};

// Per-registry-airport departure counts over the half-open window
// [start, end) on window.date.
WindowStatsResult window_stats(const std::vector<FlightRecord>& records,
                               const TimeWindow& window, const Registry& registry);

// Registry file: CSV (code,name,lat,lon,category,priority) or a JSON array of
// objects with the same fields; format chosen by extension.
Registry load_registry(const std::string& path);
Registry parse_registry_csv(std::istream& in);
Registry parse_registry_json(std::istream& in);

} // namespace dac
