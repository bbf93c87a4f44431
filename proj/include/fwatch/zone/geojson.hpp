#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fwatch/error.hpp"
#include "fwatch/zone/zone.hpp"

namespace fwatch::zone {

struct ZoneSet {
    std::vector<Zone> zones;
    std::size_t rejected = 0;
    std::size_t auto_closed = 0;

    const Zone* find(std::string_view id) const {
        for (const auto& z : zones)
            if (z.id == id) return &z;
        return nullptr;
    }
};

namespace detail {

/// GeoJSON positions are [lon, lat]. Returns nullopt on malformed input.
inline std::optional<Ring> parse_ring(const nlohmann::json& j, bool& closed_it) {
    if (!j.is_array()) return std::nullopt;
    Ring ring;
    for (const auto& pos : j) {
        if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) return std::nullopt;
        geo::LatLon p{pos[1].get<double>(), pos[0].get<double>()};
        if (!geo::valid(p)) return std::nullopt;
        ring.push_back(p);
    }
    if (!ring.empty() && ring.front() != ring.back()) {
        ring.push_back(ring.front());
        closed_it = true;
    }
    if (ring.size() < 4) return std::nullopt;
    return ring;
}

inline double lon_span(const Ring& r) {
    auto [lo, hi] = std::minmax_element(r.begin(), r.end(), [](auto a, auto b) { return a.lon < b.lon; });
    return hi->lon - lo->lon;
}

}  // namespace detail

/// Reads a FeatureCollection of Polygon features with properties `id`,
/// `name` and optional `closure_start` (YYYY-MM-DD). Rings spanning more
/// than 180 degrees of longitude are refused outright: such zones must be
/// split at the antimeridian by the data author.
inline ZoneSet load_zones(const nlohmann::json& doc) {
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
        !doc["features"].is_array())
        throw Error(Errc::NotGeoJson, "expected a FeatureCollection");
    if (doc["features"].empty()) throw Error(Errc::NoFeatures);

    ZoneSet out;
    for (const auto& feature : doc["features"]) {
        const auto geometry = feature.value("geometry", nlohmann::json{});
        const auto props = feature.value("properties", nlohmann::json::object());
        if (!geometry.is_object() || geometry.value("type", "") != "Polygon" || !geometry.contains("coordinates") ||
            !geometry["coordinates"].is_array() || geometry["coordinates"].empty() || !props.is_object()) {
            ++out.rejected;
            continue;
        }
        Zone z;
        if (props.contains("id") && props["id"].is_string())
            z.id = props["id"].get<std::string>();
        else if (props.contains("id") && props["id"].is_number_integer())
            z.id = std::to_string(props["id"].get<long long>());
        if (z.id.empty()) {
            ++out.rejected;
            continue;
        }
        z.name = props.contains("name") && props["name"].is_string() ? props["name"].get<std::string>() : z.id;
        if (props.contains("closure_start") && !props["closure_start"].is_null()) {
            z.closure_start = props["closure_start"].is_string()
                                  ? parse_date(props["closure_start"].get<std::string>())
                                  : std::nullopt;
            if (!z.closure_start) {
                ++out.rejected;
                continue;
            }
        }

        bool ok = true;
        std::size_t closed = 0;
        const auto& rings = geometry["coordinates"];
        for (std::size_t i = 0; i < rings.size() && ok; ++i) {
            bool closed_it = false;
            auto ring = detail::parse_ring(rings[i], closed_it);
            if (!ring) {
                ok = false;
                break;
            }
            if (detail::lon_span(*ring) > 180.0)
                throw Error(Errc::AntimeridianRing,
                            "zone '" + z.id + "' spans more than 180 degrees of longitude; split it at +/-180");
            closed += closed_it ? 1 : 0;
            if (i == 0)
                z.outer = std::move(*ring);
            else
                z.holes.push_back(std::move(*ring));
        }
        if (!ok) {
            ++out.rejected;
            continue;
        }
        out.auto_closed += closed;
        out.zones.push_back(std::move(z));
    }
    return out;
}

inline ZoneSet load_zones(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open zones " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(Errc::NotGeoJson, "invalid JSON in " + path);
    return load_zones(doc);
}

/// GeoJSON Feature for one zone, for the API.
inline nlohmann::json to_geojson(const Zone& z) {
    auto ring_json = [](const Ring& r) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : r) a.push_back({p.lon, p.lat});
        return a;
    };
    nlohmann::json coords = nlohmann::json::array({ring_json(z.outer)});
    for (const auto& h : z.holes) coords.push_back(ring_json(h));
    nlohmann::json props = {{"id", z.id}, {"name", z.name}};
    props["closure_start"] = z.closure_start ? nlohmann::json(format_date(*z.closure_start)) : nlohmann::json(nullptr);
    return {{"type", "Feature"}, {"properties", props}, {"geometry", {{"type", "Polygon"}, {"coordinates", coords}}}};
}

}  // namespace fwatch::zone
