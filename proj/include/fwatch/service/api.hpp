#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "fwatch/effort/detector.hpp"
#include "fwatch/service/pipeline.hpp"
#include "fwatch/service/serialize.hpp"
#include "fwatch/zone/geojson.hpp"

namespace fwatch::service {

struct ApiResponse {
    int status = 200;
    std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

/// Immutable view served by the API.
struct ApiSnapshot {
    std::shared_ptr<const Analysis> data;
    std::string snapshot_id;
    std::string built_at;
};

/// Cross-reference checks a snapshot must pass before it is served.
/// Returns a description of the first violation, or nullopt.
inline std::optional<std::string> validate_snapshot(const ApiSnapshot& s) {
    if (!s.data) return "snapshot has no data";
    for (const auto& a : s.data->alerts)
        if (!s.data->profiles.count(a.mmsi)) return "alert for unknown vessel " + a.mmsi.str();
    for (const auto& r : s.data->records)
        if (!s.data->profiles.count(r.mmsi)) return "effort for unknown vessel " + r.mmsi.str();
    if (auto range = s.data->grid.date_range(); range && !s.data->records.empty()) {
        UtcDate lo = s.data->records.front().date, hi = lo;
        for (const auto& r : s.data->records) lo = std::min(lo, r.date), hi = std::max(hi, r.date);
        if (range->first < lo || range->second > hi) return "grid dates outside effort range";
    }
    return std::nullopt;
}

/// Read-only JSON API over one snapshot. Every handler is a pure function of
/// the snapshot and the request; bodies are serializations of the module
/// outputs with no recomputation beyond re-binning at a requested resolution.
class ApiService {
public:
    explicit ApiService(ApiSnapshot snapshot) : snap_(std::move(snapshot)) {
        if (auto problem = validate_snapshot(snap_)) throw Error(Errc::BadConfig, "invalid snapshot: " + *problem);
    }

    const ApiSnapshot& snapshot() const noexcept { return snap_; }

    ApiResponse handle(std::string_view path, const QueryParams& q) const {
        try {
            if (path == "/v1/vessels") return vessels(q);
            if (path == "/v1/zones") return zones();
            if (path == "/v1/alerts") return alerts();
            if (path == "/v1/summary") return summary();
            if (path == "/v1/effort/grid") return grid(q);
            constexpr std::string_view prefix = "/v1/vessels/";
            if (path.starts_with(prefix)) {
                auto rest = path.substr(prefix.size());
                constexpr std::string_view track_suffix = "/track";
                if (rest.ends_with(track_suffix)) return track(rest.substr(0, rest.size() - track_suffix.size()), q);
                return vessel(rest);
            }
            return error(404, "path", "no such endpoint");
        } catch (const BadRequest& e) {
            return error(400, e.field, e.message);
        }
    }

private:
    struct BadRequest {
        std::string field;
        std::string message;
    };

    ApiResponse ok(json body) const {
        body["snapshot_id"] = snap_.snapshot_id;
        return {200, body.dump()};
    }

    ApiResponse error(int status, std::string_view field, std::string_view message) const {
        return {status, json{{"error", message}, {"field", field}, {"snapshot_id", snap_.snapshot_id}}.dump()};
    }

    static std::optional<std::string> param(const QueryParams& q, const std::string& key) {
        auto it = q.find(key);
        if (it == q.end()) return std::nullopt;
        return it->second;
    }

    static Mmsi parse_mmsi(std::string_view s) {
        auto m = Mmsi::parse(s);
        if (!m) throw BadRequest{"mmsi", "mmsi must be nine decimal digits"};
        return *m;
    }

    /// Accepts an instant or a bare date; a bare `to` date means end of that day.
    static std::optional<UtcSeconds> parse_time(const QueryParams& q, const std::string& key, bool end_of_day) {
        auto v = param(q, key);
        if (!v) return std::nullopt;
        if (auto t = parse_iso8601(*v)) return t;
        if (auto d = parse_date(*v))
            return end_of_day ? UtcSeconds{*d + std::chrono::days{1}} - seconds{1} : UtcSeconds{*d};
        throw BadRequest{key, "expected ISO-8601 timestamp or YYYY-MM-DD"};
    }

    static std::optional<UtcDate> parse_day(const QueryParams& q, const std::string& key) {
        auto v = param(q, key);
        if (!v) return std::nullopt;
        if (auto d = parse_date(*v)) return d;
        if (auto t = parse_iso8601(*v)) return date_of(*t);
        throw BadRequest{key, "expected YYYY-MM-DD"};
    }

    ApiResponse vessels(const QueryParams& q) const {
        std::set<identity::Tier> tiers = {identity::Tier::Known, identity::Tier::Likely, identity::Tier::Suspected};
        if (auto t = param(q, "tier"); t && !t->empty()) {
            tiers.clear();
            for (auto part : text::split(*t, ',')) {
                part = text::trim(part);
                if (part == "all") {
                    tiers = {identity::Tier::Known, identity::Tier::Likely, identity::Tier::Suspected,
                             identity::Tier::Unclassified};
                } else if (auto tier = identity::parse_tier(part)) {
                    tiers.insert(*tier);
                } else {
                    throw BadRequest{"tier", "unknown tier '" + std::string(part) + "'"};
                }
            }
        }
        json list = json::array();
        for (const auto& [m, p] : snap_.data->profiles)
            if (tiers.count(p.tier())) list.push_back(to_json(p));
        return ok({{"vessels", list}});
    }

    ApiResponse vessel(std::string_view id) const {
        const Mmsi m = parse_mmsi(id);
        auto it = snap_.data->profiles.find(m);
        if (it == snap_.data->profiles.end()) return error(404, "mmsi", "unknown vessel " + m.str());
        json body = to_json(it->second);
        json effort = json::array();
        for (const auto& r : snap_.data->records)
            if (r.mmsi == m) effort.push_back({{"utc_date", format_date(r.date)}, {"hours", r.hours}});
        body["effort"] = effort;
        return ok({{"vessel", body}});
    }

    ApiResponse track(std::string_view id, const QueryParams& q) const {
        const Mmsi m = parse_mmsi(id);
        if (!snap_.data->profiles.count(m)) return error(404, "mmsi", "unknown vessel " + m.str());
        const auto from = parse_time(q, "from", false);
        const auto to = parse_time(q, "to", true);
        if (from && to && *to < *from) throw BadRequest{"to", "'to' precedes 'from'"};
        json points = json::array();
        for (const auto& p : snap_.data->tracks.track(m)) {
            if ((from && p.t < *from) || (to && p.t > *to)) continue;
            const auto scored = effort::score_point(p, snap_.data->config.effort);
            points.push_back({{"t", format_iso8601(p.t)},
                              {"lat", p.latitude},
                              {"lon", p.longitude},
                              {"sog_kn", nullable(p.sog_reported)},
                              {"implied_kn", nullable(p.speed_implied)},
                              {"fishing_candidate", scored.fishing_candidate}});
        }
        return ok({{"mmsi", m.value}, {"points", points}});
    }

    ApiResponse grid(const QueryParams& q) const {
        grid::BBox box{-180.0, -90.0, 180.0, 90.0};
        if (auto b = param(q, "bbox")) {
            auto parts = text::split(*b, ',');
            if (parts.size() != 4) throw BadRequest{"bbox", "expected min_lon,min_lat,max_lon,max_lat"};
            double v[4];
            for (int i = 0; i < 4; ++i) {
                auto x = text::parse_number<double>(text::trim(parts[static_cast<std::size_t>(i)]));
                if (!x) throw BadRequest{"bbox", "non-numeric bbox component"};
                v[i] = *x;
            }
            box = {v[0], v[1], v[2], v[3]};
            try {
                box.validate();
            } catch (const Error& e) {
                throw BadRequest{"bbox", e.what()};
            }
        }
        const auto& base = snap_.data->grid;
        std::optional<grid::EffortGrid> rebinned;
        if (auto r = param(q, "res")) {
            auto res = text::parse_number<double>(*r);
            if (!res) throw BadRequest{"res", "resolution must be a number"};
            if (*res != base.spec().resolution()) {
                try {
                    rebinned = grid::bin_effort(snap_.data->segments, grid::GridSpec(*res));
                } catch (const Error& e) {
                    throw BadRequest{"res", e.what()};
                }
            }
        }
        const auto& g = rebinned ? *rebinned : base;
        const auto range = g.date_range();
        const auto from = parse_day(q, "from");
        const auto to = parse_day(q, "to");
        if (from && to && *to < *from) throw BadRequest{"to", "'to' precedes 'from'"};
        json cells = json::array();
        if (range) {
            for (const auto& c : g.query_bbox(box, from.value_or(range->first), to.value_or(range->second)))
                cells.push_back(to_json(c, g.spec()));
        }
        return ok({{"resolution_deg", g.spec().resolution()}, {"cells", cells}});
    }

    ApiResponse zones() const {
        json features = json::array();
        for (const auto& z : snap_.data->zones.zones) features.push_back(zone::to_geojson(z));
        return ok({{"type", "FeatureCollection"}, {"features", features}});
    }

    ApiResponse alerts() const {
        json list = json::array();
        for (const auto& a : snap_.data->alerts) list.push_back(to_json(a));
        return ok({{"alerts", list}});
    }

    ApiResponse summary() const {
        json s = run_summary(*snap_.data, snap_.snapshot_id);
        s["built_at"] = snap_.built_at;
        json range = nullptr;
        if (auto r = snap_.data->grid.date_range()) range = {{"from", format_date(r->first)}, {"to", format_date(r->second)}};
        s["date_range"] = range;
        return ok(s);
    }

    ApiSnapshot snap_;
};

/// Holder for the live snapshot. Readers take a reference-counted copy, so
/// a swap never disturbs requests already in flight.
class SnapshotHolder {
public:
    explicit SnapshotHolder(std::shared_ptr<const ApiService> initial) : current_(std::move(initial)) {}

    std::shared_ptr<const ApiService> get() const {
        std::lock_guard lock(mutex_);
        return current_;
    }

    void swap(std::shared_ptr<const ApiService> next) {
        std::lock_guard lock(mutex_);
        current_ = std::move(next);
    }

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const ApiService> current_;
};

/// Builds a servable snapshot from a finished analysis.
inline std::shared_ptr<const ApiService> make_service(Analysis analysis, std::string built_at) {
    const auto artifacts = render_artifacts(analysis);
    ApiSnapshot snap{std::make_shared<const Analysis>(std::move(analysis)), artifacts.snapshot_id, std::move(built_at)};
    return std::make_shared<const ApiService>(std::move(snap));
}

}  // namespace fwatch::service
