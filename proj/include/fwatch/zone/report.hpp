#pragma once

#include <map>
#include <span>
#include <vector>

#include "fwatch/effort/detector.hpp"
#include "fwatch/error.hpp"
#include "fwatch/zone/zone.hpp"

namespace fwatch::zone {

struct ShiftRow {
    UtcDate month{};  // first day of the month
    double inside_hours = 0.0;
    double outside_hours = 0.0;
};

/// Majority vote of member points; ties go inside.
inline bool mostly_inside(const effort::FishingSegment& seg, const Zone& zone) {
    std::size_t inside = 0;
    for (const auto& p : seg.points)
        if (contains(zone, p.position())) ++inside;
    return !seg.points.empty() && 2 * inside >= seg.points.size();
}

/// Monthly fishing hours inside vs outside `zone` for the inclusive month
/// range [first_month, last_month]. Each segment is attributed whole to one
/// side and prorated across months; months without data yield zero rows.
inline std::vector<ShiftRow> effort_shift_report(std::span<const effort::FishingSegment> segments, const Zone& zone,
                                                 UtcDate first_month, UtcDate last_month) {
    first_month = month_start(first_month);
    last_month = month_start(last_month);
    if (last_month < first_month) throw Error(Errc::EmptyWindow, "window ends before it starts");

    std::map<UtcDate, ShiftRow> rows;
    for (UtcDate m = first_month; m <= last_month; m = next_month(m)) rows[m].month = m;

    const UtcSeconds lo{first_month};
    const UtcSeconds hi{next_month(last_month)};
    for (const auto& seg : segments) {
        const auto a = std::max(seg.t_start, lo);
        const auto b = std::min(seg.t_end, hi);
        if (b <= a) continue;
        const bool inside = mostly_inside(seg, zone);
        for (const auto& share : split_by_month(a, b)) {
            auto& row = rows[share.bucket];
            (inside ? row.inside_hours : row.outside_hours) += to_hours(share.duration);
        }
    }
    std::vector<ShiftRow> out;
    for (auto& [m, r] : rows) out.push_back(r);
    return out;
}

}  // namespace fwatch::zone
