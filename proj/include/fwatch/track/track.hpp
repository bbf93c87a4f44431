#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "fwatch/error.hpp"
#include "fwatch/geo.hpp"
#include "fwatch/mmsi.hpp"
#include "fwatch/time.hpp"

namespace fwatch::track {

struct TrackPoint {
    Mmsi mmsi;
    UtcSeconds t{};
    double latitude = 0.0;
    double longitude = 0.0;
    std::optional<double> sog_reported;
    std::optional<double> speed_implied;

    geo::LatLon position() const noexcept { return {latitude, longitude}; }

    bool operator==(const TrackPoint&) const = default;
};

/// Great-circle speed between two fixes, in knots. Symmetric in its
/// arguments; throws ZeroTimeDelta when both fixes share a timestamp.
inline double derive_implied_speed(const TrackPoint& a, const TrackPoint& b) {
    const auto dt = b.t > a.t ? b.t - a.t : a.t - b.t;
    if (dt.count() == 0) throw Error(Errc::ZeroTimeDelta);
    const double km = geo::haversine_km(a.position(), b.position());
    return km / to_hours(dt) / geo::km_per_nautical_mile;
}

/// A run of fixes with no internal gap reaching the segmentation threshold.
struct VoyageSegment {
    Mmsi mmsi;
    std::vector<TrackPoint> points;

    UtcSeconds start() const { return points.front().t; }
    UtcSeconds end() const { return points.back().t; }
    std::chrono::seconds duration() const { return end() - start(); }
};

inline constexpr std::chrono::seconds default_gap_threshold = std::chrono::hours{12};

/// Splits a sorted, deduplicated track wherever consecutive fixes are at
/// least `gap_threshold` apart.
inline std::vector<VoyageSegment> segment_by_gap(std::span<const TrackPoint> track,
                                                 std::chrono::seconds gap_threshold = default_gap_threshold) {
    std::vector<VoyageSegment> out;
    for (std::size_t i = 0; i < track.size(); ++i) {
        if (i == 0 || track[i].t - track[i - 1].t >= gap_threshold) out.push_back({track[i].mmsi, {}});
        out.back().points.push_back(track[i]);
    }
    return out;
}

}  // namespace fwatch::track
