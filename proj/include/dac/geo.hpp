#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dac/types.hpp"

namespace dac {

constexpr double kEarthRadiusNm = 3440.065;

struct LatLon {
    double lat = 0.0;
    double lon = 0.0;
};

double great_circle_nm(const LatLon& a, const LatLon& b);
double great_circle_nm(const Airport& a, const Airport& b);

// Initial great-circle bearing from a to b, degrees in [0, 360), 0 = north.
// Throws if a == b (bearing undefined).
double initial_bearing_deg(const LatLon& a, const LatLon& b);

// Midpoint of the great-circle segment a-b.
LatLon geodesic_midpoint(const LatLon& a, const LatLon& b);

using Edge = std::pair<std::string, std::string>;  // stored with first < second

inline Edge make_edge(std::string a, std::string b) {
    return a < b ? Edge{std::move(a), std::move(b)} : Edge{std::move(b), std::move(a)};
}

struct AdjacencyGraph {
    std::vector<std::string> nodes;        // ordered airport codes
    std::set<Edge> edges;                  // unordered pairs, no self-loops

    bool has_edge(const std::string& a, const std::string& b) const {
        return edges.count(make_edge(a, b)) > 0;
    }
    std::vector<std::string> neighbors(const std::string& code) const;
};

// Azimuth-sector nearest-neighbor adjacency: around each airport the circle
// of bearings is split into ceil(360/azimuth_width_deg) equal sectors starting
// at sector_anchor_deg; in each sector the geodesically nearest other airport
// within max_range_nm is linked. The directed selection is symmetrized by
// union into undirected edges.
AdjacencyGraph build_iag(const Registry& registry, double azimuth_width_deg,
                         double max_range_nm, double sector_anchor_deg = 0.0);

} // namespace dac
