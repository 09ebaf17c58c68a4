#include "dac/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace dac {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') { field += '"'; ++i; }
                else quoted = false;
            } else field += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    try {
        std::size_t pos = 0;
        // delay columns come as "12.0" in some exports
        double v = std::stod(s, &pos);
        if (pos != s.size()) return false;
        out = static_cast<int>(std::lround(v));
        return true;
    } catch (...) {
        return false;
    }
}

} // namespace

FlightData parse_flight_records(std::istream& source, const FlightSchema& schema,
                                int delay_threshold_min) {
    std::string line;
    if (!std::getline(source, line))
        throw std::invalid_argument("flight data: empty input, no header row");

    const auto header = split_csv_line(line);
    auto col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw std::invalid_argument("flight data: header missing column " + name);
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t c_year = col(schema.year), c_month = col(schema.month), c_day = col(schema.day);
    const std::size_t c_airline = col(schema.airline), c_origin = col(schema.origin);
    const std::size_t c_dest = col(schema.destination), c_dep = col(schema.scheduled_departure);
    const std::size_t c_delay = col(schema.departure_delay);
    const std::size_t c_cancelled = col(schema.cancelled), c_diverted = col(schema.diverted);

    FlightData data;
    while (std::getline(source, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        const std::size_t needed = std::max({c_year, c_month, c_day, c_airline, c_origin,
                                             c_dest, c_dep, c_delay, c_cancelled, c_diverted});
        if (fields.size() <= needed) { ++data.report.rejected; continue; }

        int cancelled = 0, diverted = 0;
        if (!parse_int(fields[c_cancelled], cancelled) || !parse_int(fields[c_diverted], diverted)) {
            ++data.report.rejected;
            continue;
        }
        if (cancelled != 0 || diverted != 0) { ++data.report.cancelled_or_diverted; continue; }

        FlightRecord rec;
        int hhmm = 0, delay = 0;
        if (!parse_int(fields[c_year], rec.date.year) || !parse_int(fields[c_month], rec.date.month) ||
            !parse_int(fields[c_day], rec.date.day) || !parse_int(fields[c_dep], hhmm) ||
            !parse_int(fields[c_delay], delay)) {
            ++data.report.rejected;
            continue;
        }
        rec.airline = fields[c_airline];
        rec.origin = fields[c_origin];
        rec.destination = fields[c_dest];
        if (rec.origin.empty() || rec.destination.empty() || rec.origin == rec.destination) {
            ++data.report.rejected;
            continue;
        }
        // 2400 appears for midnight in the raw export
        if (hhmm == 2400) hhmm = 0;
        const int hours = hhmm / 100, minutes = hhmm % 100;
        if (hours < 0 || hours > 23 || minutes < 0 || minutes > 59) { ++data.report.rejected; continue; }
        rec.scheduled_departure = hours * 60 + minutes;
        rec.delayed = delay >= delay_threshold_min;
        data.records.push_back(std::move(rec));
        ++data.report.accepted;
    }
    return data;
}

FlightData load_flight_csv(const std::string& path, const FlightSchema& schema,
                           int delay_threshold_min) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open flight data: " + path);
    return parse_flight_records(in, schema, delay_threshold_min);
}

WindowStatsResult window_stats(const std::vector<FlightRecord>& records,
                               const TimeWindow& window, const Registry& registry) {
    if (registry.airports.empty())
        throw std::invalid_argument("window_stats: empty registry");
    if (window.start >= window.end)
        throw std::invalid_argument("window_stats: start must precede end");

    WindowStatsResult res;
    for (const auto& a : registry.airports) res.stats[a.code] = {};
    for (const auto& r : records) {
        if (!window.contains(r.date, r.scheduled_departure)) continue;
        auto it = res.stats.find(r.origin);
        if (it == res.stats.end()) { ++res.unknown_origins; continue; }
        ++it->second.flights;
        if (r.delayed) ++it->second.delayed;
    }
    return res;
}

Registry parse_registry_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("registry: empty input");
    const auto header = split_csv_line(line);
    auto col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw std::invalid_argument("registry: header missing column " + name);
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t c_code = col("code"), c_name = col("name"), c_lat = col("lat"),
                      c_lon = col("lon"), c_cat = col("category"), c_pri = col("priority");

    Registry reg;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        Airport a;
        a.code = f.at(c_code);
        a.name = f.at(c_name);
        a.lat = std::stod(f.at(c_lat));
        a.lon = std::stod(f.at(c_lon));
        a.category = category_from_string(f.at(c_cat));
        a.priority = std::stoi(f.at(c_pri));
        reg.airports.push_back(std::move(a));
    }

    for (const auto& a : reg.airports) {
        if (a.lat < -90 || a.lat > 90 || a.lon < -180 || a.lon > 180)
            throw std::invalid_argument("registry: coordinates out of range for " + a.code);
        if (a.priority < 0)
            throw std::invalid_argument("registry: negative priority for " + a.code);
    }
    std::vector<std::string> codes;
    for (const auto& a : reg.airports) codes.push_back(a.code);
    std::sort(codes.begin(), codes.end());
    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
        throw std::invalid_argument("registry: duplicate airport code");
    return reg;
}

Registry parse_registry_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    Registry reg;
    for (const auto& item : j) {
        Airport a;
        a.code = item.at("code").get<std::string>();
        a.name = item.value("name", std::string{});
        a.lat = item.at("lat").get<double>();
        a.lon = item.at("lon").get<double>();
        a.category = category_from_string(item.at("category").get<std::string>());
        a.priority = item.value("priority", 0);
        reg.airports.push_back(std::move(a));
    }
    for (const auto& a : reg.airports)
        if (a.lat < -90 || a.lat > 90 || a.lon < -180 || a.lon > 180)
            throw std::invalid_argument("registry: coordinates out of range for " + a.code);
    return reg;
}

Registry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_registry_json(in);
    return parse_registry_csv(in);
}

} // namespace dac
