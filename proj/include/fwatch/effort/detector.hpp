#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwatch/geo.hpp"
#include "fwatch/track/track.hpp"

// Apparent-fishing detection by sustained low speed. Scoring is per point
// and looks at nothing but that point; run extraction applies the
// duration rules. Swapping in a learned model means replacing score_point.

namespace fwatch::effort {

struct EffortParams {
    double v_min_kn = 0.5;
    double v_max_kn = 5.5;
    std::chrono::seconds min_duration = std::chrono::minutes{15};
    std::chrono::seconds bridge_tolerance = std::chrono::minutes{5};
};

struct EffortPoint {
    track::TrackPoint point;
    bool fishing_candidate = false;
    std::optional<double> effective_speed;

    bool no_speed() const noexcept { return !effective_speed; }
};

/// Reported SOG when present, otherwise the implied speed.
inline EffortPoint score_point(const track::TrackPoint& p, const EffortParams& params = {}) {
    EffortPoint e{p, false, p.sog_reported ? p.sog_reported : p.speed_implied};
    if (e.effective_speed)
        e.fishing_candidate = *e.effective_speed >= params.v_min_kn && *e.effective_speed <= params.v_max_kn;
    return e;
}

struct SegmentId {
    Mmsi mmsi;
    std::uint32_t ordinal = 0;

    auto operator<=>(const SegmentId&) const = default;

    std::string str() const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "-%04u", ordinal);
        return mmsi.str() + buf;
    }
};

struct FishingSegment {
    SegmentId id;
    UtcSeconds t_start{};
    UtcSeconds t_end{};
    double hours = 0.0;
    geo::LatLon centroid;
    /// Every fix from the first to the last candidate, bridged ones included.
    std::vector<track::TrackPoint> points;

    Mmsi mmsi() const noexcept { return id.mmsi; }
    std::size_t point_count() const noexcept { return points.size(); }
};

inline geo::LatLon mean_position(std::span<const track::TrackPoint> pts) {
    geo::LatLon c;
    if (pts.empty()) return c;
    for (const auto& p : pts) {
        c.lat += p.latitude;
        c.lon += p.longitude;
    }
    c.lat /= static_cast<double>(pts.size());
    c.lon /= static_cast<double>(pts.size());
    return c;
}

/// Maximal runs of candidate points from one vessel's voyage. A stretch of
/// non-candidates shorter than the bridge tolerance (measured from its first
/// point to the next candidate) does not break a run; runs shorter than
/// `min_duration` are dropped.
inline std::vector<FishingSegment> extract_segments(std::span<const EffortPoint> points,
                                                    const EffortParams& params = {},
                                                    std::uint32_t first_ordinal = 0) {
    std::vector<FishingSegment> out;
    std::optional<std::size_t> run_first, run_last, gap_first;

    auto close = [&] {
        if (!run_first) return;
        const auto& a = points[*run_first].point;
        const auto& b = points[*run_last].point;
        if (b.t > a.t && b.t - a.t >= params.min_duration) {
            FishingSegment s;
            s.id = {a.mmsi, first_ordinal + static_cast<std::uint32_t>(out.size())};
            s.t_start = a.t;
            s.t_end = b.t;
            s.hours = to_hours(b.t - a.t);
            for (std::size_t i = *run_first; i <= *run_last; ++i) s.points.push_back(points[i].point);
            s.centroid = mean_position(s.points);
            out.push_back(std::move(s));
        }
        run_first.reset();
        run_last.reset();
    };

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].fishing_candidate) {
            if (run_first && !gap_first) gap_first = i;
            continue;
        }
        if (run_first && gap_first && points[i].point.t - points[*gap_first].point.t >= params.bridge_tolerance)
            close();
        if (!run_first) run_first = i;
        run_last = i;
        gap_first.reset();
    }
    close();
    return out;
}

inline std::vector<EffortPoint> score_track(std::span<const track::TrackPoint> pts, const EffortParams& params = {}) {
    std::vector<EffortPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(score_point(p, params));
    return out;
}

/// Voyage segmentation, scoring and extraction for one vessel's full track.
/// Segment ordinals run across voyages.
inline std::vector<FishingSegment> detect_vessel_effort(std::span<const track::TrackPoint> track,
                                                        const EffortParams& params = {},
                                                        std::chrono::seconds gap_threshold = track::default_gap_threshold) {
    std::vector<FishingSegment> out;
    for (const auto& voyage : track::segment_by_gap(track, gap_threshold)) {
        auto segs = extract_segments(score_track(voyage.points, params), params, static_cast<std::uint32_t>(out.size()));
        for (auto& s : segs) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace fwatch::effort
