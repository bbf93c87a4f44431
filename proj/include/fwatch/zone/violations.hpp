#pragma once

#include <span>
#include <string>
#include <vector>

#include "fwatch/effort/detector.hpp"
#include "fwatch/zone/zone.hpp"

namespace fwatch::zone {

struct ViolationAlert {
    Mmsi mmsi;
    std::string zone_id;
    effort::SegmentId segment;
    UtcSeconds t_start{};
    UtcSeconds t_end{};
    /// First member point inside the zone at or after the closure.
    geo::LatLon first_inside;
    /// Segment hours weighted by the share of member points inside after the closure.
    double hours_inside = 0.0;
};

/// One alert per (segment, zone) whose fishing segment has at least one
/// member point inside the zone at or after the zone's closure instant.
inline std::vector<ViolationAlert> detect_violations(std::span<const effort::FishingSegment> segments,
                                                     std::span<const Zone> zones) {
    std::vector<ViolationAlert> out;
    for (const auto& seg : segments) {
        if (seg.points.empty()) continue;
        for (const auto& z : zones) {
            const auto closure = z.closure_instant();
            if (!closure || seg.t_end < *closure) continue;
            std::size_t inside = 0;
            std::optional<geo::LatLon> first;
            for (const auto& p : seg.points) {
                if (p.t < *closure || !contains(z, p.position())) continue;
                if (!first) first = p.position();
                ++inside;
            }
            if (!first) continue;
            out.push_back({seg.mmsi(), z.id, seg.id, seg.t_start, seg.t_end, *first,
                           seg.hours * static_cast<double>(inside) / static_cast<double>(seg.points.size())});
        }
    }
    return out;
}

}  // namespace fwatch::zone
