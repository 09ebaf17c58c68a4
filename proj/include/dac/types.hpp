#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dac {

enum class AirportCategory { Large, Medium, Regional };

std::string to_string(AirportCategory c);
AirportCategory category_from_string(const std::string& s);

struct Airport {
    std::string code;  // 3-letter identifier
    std::string name;
    double lat = 0.0;  // degrees, [-90, 90]
    double lon = 0.0;  // degrees, [-180, 180]
    AirportCategory category = AirportCategory::Regional;
    int priority = 0;  // user-defined, >= 0
};

// Calendar date, no timezone handling needed (dataset is local scheduled time).
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    bool operator==(const Date&) const = default;
    auto operator<=>(const Date&) const = default;
};

Date parse_date(const std::string& iso);  // "YYYY-MM-DD"
std::string to_string(const Date& d);

struct FlightRecord {
    Date date;
    std::string airline;
    std::string origin;
    std::string destination;
    int scheduled_departure = 0;  // minutes of day [0, 1439]
    bool delayed = false;
};

// Half-open window [start, end) in minutes of day.
struct TimeWindow {
    Date date;
    int start = 0;
    int end = 0;

    double hours() const { return (end - start) / 60.0; }
    bool contains(const Date& d, int minutes) const {
        return d == date && minutes >= start && minutes < end;
    }
};

struct AirportStats {
    int flights = 0;  // f: scheduled departures in window
    int delayed = 0;  // d: delayed departures in window

    double delay_ratio() const {
        return flights == 0 ? 0.0 : static_cast<double>(delayed) / flights;
    }
};

// Per-airport (f, d) counts for one time window. Every registry airport
// is present, possibly with f = 0.
using WindowStats = std::map<std::string, AirportStats>;

struct Registry {
    std::vector<Airport> airports;

    const Airport* find(const std::string& code) const;
    const Airport& at(const std::string& code) const;
    bool contains(const std::string& code) const { return find(code) != nullptr; }
    std::size_t size() const { return airports.size(); }
};

} // namespace dac
