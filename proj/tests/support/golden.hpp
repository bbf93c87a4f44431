#pragma once

// Flattens decoded records into the key set written by the independent
// oracle script (tests/oracle/hand_decode.py) so the two compare directly.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fwatch/ais/decoder.hpp"

namespace fwatch::golden {

using nlohmann::json;

inline json opt(const auto& v) { return v ? json(*v) : json(nullptr); }

inline json flatten(const ais::DecodedRecord& rec) {
    json j = {{"callsign", nullptr}, {"cog_deg", nullptr}, {"heading_deg", nullptr}, {"imo", nullptr},
              {"lat", nullptr},      {"lon", nullptr},     {"name", nullptr},        {"part", nullptr},
              {"second", nullptr},   {"self_id_fishing", nullptr}, {"ship_type", nullptr}, {"sog_kn", nullptr}};
    j["received_at"] = format_iso8601(rec.received_at);
    if (const auto* p = std::get_if<ais::PositionReport>(&rec.message)) {
        j["type"] = p->message_type;
        j["mmsi"] = p->mmsi.value;
        j["lat"] = opt(p->latitude);
        j["lon"] = opt(p->longitude);
        j["sog_kn"] = opt(p->sog);
        j["cog_deg"] = opt(p->cog);
        j["heading_deg"] = opt(p->true_heading);
        j["second"] = opt(p->utc_second);
    } else {
        const auto& s = std::get<ais::StaticReport>(rec.message);
        j["type"] = s.message_type;
        j["mmsi"] = s.mmsi.value;
        j["imo"] = opt(s.imo_number);
        j["ship_type"] = opt(s.ship_type_code);
        j["self_id_fishing"] = s.self_id_fishing;
        j["part"] = s.part ? json(std::string(1, *s.part)) : json(nullptr);
        j["name"] = s.vessel_name;
        j["callsign"] = s.callsign;
    }
    return j;
}

inline std::vector<json> load_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path);
    std::vector<json> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

/// Sentences of the corpus log, with comments and blank lines dropped.
inline std::vector<ais::RawLine> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path);
    std::vector<ais::RawLine> out;
    for (std::string line; std::getline(in, line);)
        if (auto raw = ais::parse_log_line(line)) out.push_back(std::move(*raw));
    return out;
}

}  // namespace fwatch::golden
