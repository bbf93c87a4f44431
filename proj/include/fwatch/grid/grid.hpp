#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "fwatch/effort/detector.hpp"
#include "fwatch/error.hpp"
#include "fwatch/time.hpp"

namespace fwatch::grid {

/// Regular lat/lon grid. Cell (i, j) covers
/// [-90 + i*res, -90 + (i+1)*res) x [-180 + j*res, -180 + (j+1)*res).
class GridSpec {
public:
    explicit GridSpec(double resolution_deg = 0.1) : res_(resolution_deg) {
        if (!(res_ > 0.0) || !std::isfinite(res_)) throw Error(Errc::InvalidGridSpec, "resolution must be positive");
        const double rows = 180.0 / res_;
        const double cols = 360.0 / res_;
        if (std::abs(rows - std::round(rows)) > 1e-9 * rows || std::abs(cols - std::round(cols)) > 1e-9 * cols)
            throw Error(Errc::InvalidGridSpec, "180 and 360 must be integer multiples of the resolution");
        rows_ = static_cast<int>(std::lround(rows));
        cols_ = static_cast<int>(std::lround(cols));
    }

    double resolution() const noexcept { return res_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int lat_index(double lat) const noexcept {
        return std::clamp(static_cast<int>(std::floor((lat + 90.0) * rows_ / 180.0)), 0, rows_ - 1);
    }
    /// +180 wraps onto the -180 column.
    int lon_index(double lon) const noexcept {
        const int j = static_cast<int>(std::floor((lon + 180.0) * cols_ / 360.0));
        return j >= cols_ ? j - cols_ : std::max(j, 0);
    }
    // One rounding of an exact integer ratio, so edges land on the nearest
    // double to decimal coordinates like 10.1 at 0.1 degree resolution.
    double lat_min(int i) const noexcept { return (180.0 * i - 90.0 * rows_) / rows_; }
    double lon_min(int j) const noexcept { return (360.0 * j - 180.0 * cols_) / cols_; }

    bool operator==(const GridSpec& o) const noexcept { return res_ == o.res_; }

private:
    double res_;
    int rows_ = 0;
    int cols_ = 0;
};

struct GridCell {
    int lat_index = 0;
    int lon_index = 0;
    UtcDate date{};
    double hours = 0.0;

    bool operator==(const GridCell&) const = default;
};

struct BBox {
    double min_lon = 0, min_lat = 0, max_lon = 0, max_lat = 0;

    void validate() const {
        if (!(min_lon < max_lon) || !(min_lat < max_lat))
            throw Error(Errc::InvalidBbox, "bbox needs min < max on both axes");
        if (!geo::valid_lat(min_lat) || !geo::valid_lat(max_lat) || !geo::valid_lon(min_lon) || !geo::valid_lon(max_lon))
            throw Error(Errc::InvalidBbox, "bbox outside coordinate range");
    }
};

/// Sparse daily effort grid; zero cells are never stored.
class EffortGrid {
public:
    explicit EffortGrid(GridSpec spec = GridSpec{}) : spec_(spec) {}

    const GridSpec& spec() const noexcept { return spec_; }

    void add(UtcDate date, int lat_index, int lon_index, double hours) {
        if (hours <= 0.0) return;
        cells_[{date, lat_index, lon_index}] += hours;
    }

    /// Associative, commutative merge of partial grids at the same spec.
    void merge(const EffortGrid& other) {
        if (!(other.spec_ == spec_)) throw Error(Errc::InvalidGridSpec, "merging grids of different resolution");
        for (const auto& [k, h] : other.cells_) cells_[k] += h;
    }

    std::size_t size() const noexcept { return cells_.size(); }

    double total_hours() const noexcept {
        double s = 0.0;
        for (const auto& [k, h] : cells_) s += h;
        return s;
    }

    /// All cells ordered by (date, lat_index, lon_index).
    std::vector<GridCell> cells() const {
        std::vector<GridCell> out;
        out.reserve(cells_.size());
        for (const auto& [k, h] : cells_) out.push_back({std::get<1>(k), std::get<2>(k), std::get<0>(k), h});
        return out;
    }

    /// Cells whose closed rectangle intersects the closed bbox and whose date
    /// lies in [from, to].
    std::vector<GridCell> query_bbox(const BBox& box, UtcDate from, UtcDate to) const {
        box.validate();
        std::vector<GridCell> out;
        for (auto it = cells_.lower_bound({from, std::numeric_limits<int>::min(), std::numeric_limits<int>::min()});
             it != cells_.end() && std::get<0>(it->first) <= to; ++it) {
            const auto& [date, i, j] = it->first;
            if (spec_.lat_min(i) <= box.max_lat && spec_.lat_min(i + 1) >= box.min_lat &&
                spec_.lon_min(j) <= box.max_lon && spec_.lon_min(j + 1) >= box.min_lon)
                out.push_back({i, j, date, it->second});
        }
        return out;
    }

    std::optional<std::pair<UtcDate, UtcDate>> date_range() const {
        if (cells_.empty()) return std::nullopt;
        return std::pair{std::get<0>(cells_.begin()->first), std::get<0>(cells_.rbegin()->first)};
    }

private:
    GridSpec spec_;
    std::map<std::tuple<UtcDate, int, int>, double> cells_;
};

/// Each segment's per-date hours go to the cell holding the centroid of the
/// segment's member points on that date (whole-segment centroid if the date
/// has no member point). Segments are binned in id order so the result does
/// not depend on input order.
inline EffortGrid bin_effort(std::span<const effort::FishingSegment> segments, GridSpec spec = GridSpec{}) {
    std::vector<const effort::FishingSegment*> order;
    order.reserve(segments.size());
    for (const auto& s : segments) order.push_back(&s);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });

    EffortGrid grid(spec);
    std::vector<track::TrackPoint> day_points;
    for (const auto* s : order) {
        for (const auto& share : split_by_day(s->t_start, s->t_end)) {
            day_points.clear();
            for (const auto& p : s->points)
                if (date_of(p.t) == share.bucket) day_points.push_back(p);
            const geo::LatLon c = day_points.empty() ? s->centroid : effort::mean_position(day_points);
            grid.add(share.bucket, spec.lat_index(c.lat), spec.lon_index(c.lon), to_hours(share.duration));
        }
    }
    return grid;
}

}  // namespace fwatch::grid
