#include "dac/types.hpp"

#include <charconv>
#include <cstdio>

namespace dac {

std::string to_string(AirportCategory c) {
    switch (c) {
        case AirportCategory::Large: return "Large";
        case AirportCategory::Medium: return "Medium";
        case AirportCategory::Regional: return "Regional";
    }
    return "Regional";
}

AirportCategory category_from_string(const std::string& s) {
    if (s == "Large" || s == "large") return AirportCategory::Large;
    if (s == "Medium" || s == "medium") return AirportCategory::Medium;
    if (s == "Regional" || s == "regional") return AirportCategory::Regional;
    throw std::invalid_argument("unknown airport category: " + s);
}

Date parse_date(const std::string& iso) {
    Date d;
    if (std::sscanf(iso.c_str(), "%d-%d-%d", &d.year, &d.month, &d.day) != 3 ||
        d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
        throw std::invalid_argument("bad date: " + iso);
    return d;
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

const Airport* Registry::find(const std::string& code) const {
    for (const auto& a : airports)
        if (a.code == code) return &a;
    return nullptr;
}

const Airport& Registry::at(const std::string& code) const {
    const Airport* a = find(code);
    if (!a) throw std::invalid_argument("unknown airport code: " + code);
    return *a;
}

} // namespace dac
