#pragma once

#include <cmath>
#include <numbers>

namespace fwatch::geo {

inline constexpr double earth_radius_km = 6371.0;
inline constexpr double km_per_nautical_mile = 1.852;

struct LatLon {
    double lat = 0.0;
    double lon = 0.0;

    constexpr bool operator==(const LatLon&) const = default;
};

constexpr bool valid_lat(double lat) noexcept { return lat >= -90.0 && lat <= 90.0; }
constexpr bool valid_lon(double lon) noexcept { return lon >= -180.0 && lon <= 180.0; }
inline bool valid(LatLon p) noexcept {
    return std::isfinite(p.lat) && std::isfinite(p.lon) && valid_lat(p.lat) && valid_lon(p.lon);
}

/// Great-circle distance on a sphere of radius 6371 km.
inline double haversine_km(LatLon a, LatLon b) noexcept {
    constexpr double rad = std::numbers::pi / 180.0;
    const double dlat = (b.lat - a.lat) * rad;
    const double dlon = (b.lon - a.lon) * rad;
    const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(a.lat * rad) * std::cos(b.lat * rad) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * earth_radius_km * std::asin(std::sqrt(std::fmin(1.0, s)));
}

}  // namespace fwatch::geo
