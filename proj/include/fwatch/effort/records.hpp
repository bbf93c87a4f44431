#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fwatch/effort/detector.hpp"

namespace fwatch::effort {

/// Fishing hours credited to one vessel on one UTC date.
struct EffortRecord {
    Mmsi mmsi;
    UtcDate date{};
    double hours = 0.0;
    std::vector<SegmentId> segments;
};

/// Prorates each segment linearly across the UTC dates it overlaps.
/// Output is ordered by (mmsi, date).
inline std::vector<EffortRecord> effort_records(std::span<const FishingSegment> segments) {
    std::map<std::pair<Mmsi, UtcDate>, EffortRecord> acc;
    for (const auto& s : segments) {
        for (const auto& share : split_by_day(s.t_start, s.t_end)) {
            auto& r = acc[{s.mmsi(), share.bucket}];
            r.mmsi = s.mmsi();
            r.date = share.bucket;
            r.hours += to_hours(share.duration);
            r.segments.push_back(s.id);
        }
    }
    std::vector<EffortRecord> out;
    out.reserve(acc.size());
    for (auto& [k, r] : acc) out.push_back(std::move(r));
    return out;
}

}  // namespace fwatch::effort
