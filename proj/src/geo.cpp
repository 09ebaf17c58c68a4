#include "dac/geo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dac {

namespace {
constexpr double kPi = 3.14159265358979323846;
double rad(double deg) { return deg * kPi / 180.0; }
double deg(double r) { return r * 180.0 / kPi; }
} // namespace

double great_circle_nm(const LatLon& a, const LatLon& b) {
    const double la1 = rad(a.lat), la2 = rad(b.lat);
    const double dlat = rad(b.lat - a.lat);
    const double dlon = rad(b.lon - a.lon);
    const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(la1) * std::cos(la2) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * kEarthRadiusNm * std::asin(std::min(1.0, std::sqrt(s)));
}

double great_circle_nm(const Airport& a, const Airport& b) {
    return great_circle_nm({a.lat, a.lon}, {b.lat, b.lon});
}

double initial_bearing_deg(const LatLon& a, const LatLon& b) {
    if (a.lat == b.lat && a.lon == b.lon)
        throw std::invalid_argument("initial_bearing_deg: coincident points, bearing undefined");
    const double la1 = rad(a.lat), la2 = rad(b.lat);
    const double dlon = rad(b.lon - a.lon);
    const double y = std::sin(dlon) * std::cos(la2);
    const double x = std::cos(la1) * std::sin(la2) - std::sin(la1) * std::cos(la2) * std::cos(dlon);
    double brg = deg(std::atan2(y, x));
    brg = std::fmod(brg + 360.0, 360.0);
    return brg == 360.0 ? 0.0 : brg;
}

LatLon geodesic_midpoint(const LatLon& a, const LatLon& b) {
    const double la1 = rad(a.lat), lo1 = rad(a.lon);
    const double la2 = rad(b.lat), lo2 = rad(b.lon);
    const double x1 = std::cos(la1) * std::cos(lo1), y1 = std::cos(la1) * std::sin(lo1), z1 = std::sin(la1);
    const double x2 = std::cos(la2) * std::cos(lo2), y2 = std::cos(la2) * std::sin(lo2), z2 = std::sin(la2);
    const double x = (x1 + x2) / 2, y = (y1 + y2) / 2, z = (z1 + z2) / 2;
    const double hyp = std::hypot(x, y);
    return {deg(std::atan2(z, hyp)), deg(std::atan2(y, x))};
}

std::vector<std::string> AdjacencyGraph::neighbors(const std::string& code) const {
    std::vector<std::string> out;
    for (const auto& [a, b] : edges) {
        if (a == code) out.push_back(b);
        else if (b == code) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AdjacencyGraph build_iag(const Registry& registry, double azimuth_width_deg,
                         double max_range_nm, double sector_anchor_deg) {
    if (registry.airports.empty())
        throw std::invalid_argument("build_iag: empty registry");
    if (azimuth_width_deg <= 0.0 || azimuth_width_deg > 360.0)
        throw std::invalid_argument("build_iag: azimuth width must be in (0, 360]");

    const int sectors = static_cast<int>(std::ceil(360.0 / azimuth_width_deg));

    AdjacencyGraph g;
    // Node order follows code order so the graph is independent of input order.
    for (const auto& a : registry.airports) g.nodes.push_back(a.code);
    std::sort(g.nodes.begin(), g.nodes.end());

    for (const auto& a : registry.airports) {
        // nearest candidate per sector: sector -> (distance, code)
        std::map<int, std::pair<double, std::string>> best;
        for (const auto& b : registry.airports) {
            if (b.code == a.code) continue;
            const double d = great_circle_nm(a, b);
            if (d > max_range_nm) continue;
            const double brg =
                std::fmod(initial_bearing_deg({a.lat, a.lon}, {b.lat, b.lon}) - sector_anchor_deg + 360.0, 360.0);
            int s = static_cast<int>(brg / azimuth_width_deg);
            if (s >= sectors) s = sectors - 1;
            auto it = best.find(s);
            if (it == best.end() || d < it->second.first ||
                (d == it->second.first && b.code < it->second.second)) {
                best[s] = {d, b.code};
            }
        }
        for (const auto& [s, hit] : best) g.edges.insert(make_edge(a.code, hit.second));
    }
    return g;
}

} // namespace dac
