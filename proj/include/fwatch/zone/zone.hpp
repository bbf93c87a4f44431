#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fwatch/geo.hpp"
#include "fwatch/time.hpp"

namespace fwatch::zone {

using Ring = std::vector<geo::LatLon>;

/// A managed area: one outer ring and optional holes, in plain lat/lon.
/// Rings are closed (first vertex repeated at the end).
struct Zone {
    std::string id;
    std::string name;
    Ring outer;
    std::vector<Ring> holes;
    std::optional<UtcDate> closure_start;

    /// Instant from which fishing inside is a violation (00:00 UTC).
    std::optional<UtcSeconds> closure_instant() const {
        if (!closure_start) return std::nullopt;
        return UtcSeconds{*closure_start};
    }
};

namespace detail {

inline bool on_edge(geo::LatLon p, geo::LatLon a, geo::LatLon b) noexcept {
    const double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
    if (cross != 0.0) return false;
    return p.lon >= std::min(a.lon, b.lon) && p.lon <= std::max(a.lon, b.lon) && p.lat >= std::min(a.lat, b.lat) &&
           p.lat <= std::max(a.lat, b.lat);
}

inline bool on_boundary(const Ring& ring, geo::LatLon p) noexcept {
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++)
        if (on_edge(p, ring[j], ring[i])) return true;
    return false;
}

/// Even-odd crossing test with a ray toward +lon.
inline bool crossings_odd(const Ring& ring, geo::LatLon p) noexcept {
    bool odd = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const auto& a = ring[i];
        const auto& b = ring[j];
        if ((a.lat > p.lat) != (b.lat > p.lat) &&
            p.lon < (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon)
            odd = !odd;
    }
    return odd;
}

}  // namespace detail

/// Point-in-zone. Points on any ring edge, holes included, count as inside.
inline bool contains(const Zone& zone, geo::LatLon p) noexcept {
    if (zone.outer.empty()) return false;
    if (detail::on_boundary(zone.outer, p)) return true;
    for (const auto& h : zone.holes)
        if (!h.empty() && detail::on_boundary(h, p)) return true;
    if (!detail::crossings_odd(zone.outer, p)) return false;
    for (const auto& h : zone.holes)
        if (!h.empty() && detail::crossings_odd(h, p)) return false;
    return true;
}

}  // namespace fwatch::zone
