#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "fwatch/ais/messages.hpp"
#include "fwatch/effort/records.hpp"
#include "fwatch/grid/grid.hpp"
#include "fwatch/identity/profile.hpp"
#include "fwatch/text.hpp"
#include "fwatch/zone/report.hpp"
#include "fwatch/zone/violations.hpp"

// Wire formats shared by the batch artifacts and the HTTP API, so that both
// render a given module output identically.

namespace fwatch::service {

using nlohmann::json;

template <class T>
json nullable(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

/// `fwatch decode` record: Unavailable fields are null.
inline json to_json(const ais::DecodedMessage& m, UtcSeconds received_at) {
    json j = {{"type", nullptr}, {"mmsi", nullptr},        {"lat", nullptr},      {"lon", nullptr},
              {"sog_kn", nullptr}, {"cog_deg", nullptr}, {"heading_deg", nullptr}, {"name", nullptr},
              {"callsign", nullptr}, {"ship_type", nullptr}, {"received_at", format_iso8601(received_at)}};
    if (const auto* p = std::get_if<ais::PositionReport>(&m)) {
        j["type"] = p->message_type;
        j["mmsi"] = p->mmsi.value;
        j["lat"] = nullable(p->latitude);
        j["lon"] = nullable(p->longitude);
        j["sog_kn"] = nullable(p->sog);
        j["cog_deg"] = nullable(p->cog);
        j["heading_deg"] = nullable(p->true_heading);
    } else {
        const auto& s = std::get<ais::StaticReport>(m);
        j["type"] = s.message_type;
        j["mmsi"] = s.mmsi.value;
        j["name"] = s.vessel_name;
        j["callsign"] = s.callsign;
        j["ship_type"] = nullable(s.ship_type_code);
    }
    return j;
}

inline json to_json(const zone::ViolationAlert& a) {
    return {{"mmsi", a.mmsi.value},
            {"zone_id", a.zone_id},
            {"segment_id", a.segment.str()},
            {"t_start", format_iso8601(a.t_start)},
            {"t_end", format_iso8601(a.t_end)},
            {"lat", a.first_inside.lat},
            {"lon", a.first_inside.lon},
            {"hours_inside", a.hours_inside}};
}

inline json to_json(const grid::GridCell& c, const grid::GridSpec& spec) {
    return {{"date", format_date(c.date)},         {"lat_index", c.lat_index},
            {"lon_index", c.lon_index},            {"lat_min", spec.lat_min(c.lat_index)},
            {"lon_min", spec.lon_min(c.lon_index)}, {"hours", c.hours}};
}

inline json to_json(const identity::RegistryEntry& e) {
    return {{"imo", nullable(e.imo_number)},
            {"callsign", e.callsign},
            {"name", e.name},
            {"gear_type", e.gear_type},
            {"source_list", e.source_list}};
}

inline json to_json(const identity::VesselProfile& p) {
    json matches = json::array();
    for (const auto& e : p.registry_matches()) matches.push_back(to_json(e));
    json days = json::array();
    for (const auto& d : p.fishing_days_observed()) days.push_back(format_date(d));
    double hours = 0.0;
    for (const auto& [d, h] : p.fishing_hours_by_day()) hours += h;
    std::string name = p.latest_name();
    std::string gear;
    if (!p.registry_matches().empty()) {
        gear = p.registry_matches().front().gear_type;
        if (name.empty()) name = p.registry_matches().front().name;
    }
    return {{"mmsi", p.mmsi().value},
            {"tier", identity::to_string(p.tier())},
            {"name", name},
            {"callsign", p.latest_callsign()},
            {"ship_type", nullable(p.ship_type())},
            {"self_id_fishing", p.self_id_fishing()},
            {"gear_type", gear},
            {"fishing_days", days},
            {"fishing_hours", hours},
            {"registry_matches", matches}};
}

inline void write_effort_csv(std::ostream& out, std::span<const effort::EffortRecord> records) {
    out << "mmsi,utc_date,hours\n";
    for (const auto& r : records)
        out << r.mmsi.str() << ',' << format_date(r.date) << ',' << text::format_double(r.hours) << '\n';
}

inline void write_report_csv(std::ostream& out, std::span<const zone::ShiftRow> rows) {
    out << "month,inside_hours,outside_hours\n";
    for (const auto& r : rows)
        out << format_month(r.month) << ',' << text::format_double(r.inside_hours) << ','
            << text::format_double(r.outside_hours) << '\n';
}

inline void write_grid_csv(std::ostream& out, const grid::EffortGrid& g) {
    out << "date,lat_index,lon_index,lat_min,lon_min,hours\n";
    for (const auto& c : g.cells())
        out << format_date(c.date) << ',' << c.lat_index << ',' << c.lon_index << ','
            << text::format_double(g.spec().lat_min(c.lat_index)) << ','
            << text::format_double(g.spec().lon_min(c.lon_index)) << ',' << text::format_double(c.hours) << '\n';
}

inline void write_alerts_jsonl(std::ostream& out, std::span<const zone::ViolationAlert> alerts) {
    for (const auto& a : alerts) out << to_json(a).dump() << '\n';
}

}  // namespace fwatch::service
