#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fwatch/error.hpp"
#include "fwatch/text.hpp"
#include "fwatch/track/store.hpp"

namespace fwatch::track {

inline constexpr std::string_view tracks_header = "fwatch-tracks v1";

namespace detail {
inline std::string optional_field(const std::optional<double>& v) { return v ? text::format_double(*v) : ""; }

inline std::optional<std::optional<double>> parse_optional(std::string_view s) {
    if (s.empty()) return std::optional<double>{};
    auto v = text::parse_number<double>(s);
    if (!v) return std::nullopt;
    return std::optional<double>{*v};
}

inline std::optional<TrackPoint> parse_record(std::string_view line) {
    const auto f = text::split(line, ',');
    if (f.size() != 6) return std::nullopt;
    auto mmsi = Mmsi::parse(f[0]);
    auto t = parse_iso8601(f[1]);
    auto lat = text::parse_number<double>(f[2]);
    auto lon = text::parse_number<double>(f[3]);
    auto sog = parse_optional(f[4]);
    auto implied = parse_optional(f[5]);
    if (!mmsi || !t || !lat || !lon || !sog || !implied) return std::nullopt;
    TrackPoint p{*mmsi, *t, *lat, *lon, *sog, *implied};
    if (!geo::valid(p.position())) return std::nullopt;
    return p;
}
}  // namespace detail

/// Line-oriented text format, sorted by (mmsi, t). Doubles are written in
/// shortest round-trip form so a reload is bit-exact.
inline void write_tracks(const TrackStore& store, std::ostream& out) {
    out << tracks_header << '\n';
    for (const auto& [mmsi, track] : store.tracks()) {
        const std::string id = mmsi.str();
        for (const auto& p : track) {
            out << id << ',' << format_iso8601(p.t) << ',' << text::format_double(p.latitude) << ','
                << text::format_double(p.longitude) << ',' << detail::optional_field(p.sog_reported) << ','
                << detail::optional_field(p.speed_implied) << '\n';
        }
    }
}

inline void write_tracks(const TrackStore& store, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IoFailure, "cannot write " + path);
    write_tracks(store, out);
    if (!out) throw Error(Errc::IoFailure, "write failed: " + path);
}

struct TrackLoad {
    TrackStore store;
    /// 1 when the final record lacked its newline and was dropped.
    std::size_t truncated = 0;
    /// Complete lines that failed to parse or duplicated a timestamp.
    std::size_t corrupt = 0;
};

inline TrackLoad read_tracks(std::istream& in, TrackParams params = {}) {
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const auto nl = content.find('\n');
    if (nl == std::string::npos || std::string_view(content).substr(0, nl) != tracks_header)
        throw Error(Errc::CorruptHeader, "expected '" + std::string(tracks_header) + "'");

    TrackLoad out{TrackStore(params)};
    std::size_t pos = nl + 1;
    while (pos < content.size()) {
        const auto end = content.find('\n', pos);
        if (end == std::string::npos) {
            ++out.truncated;
            break;
        }
        auto p = detail::parse_record(std::string_view(content).substr(pos, end - pos));
        if (!p || !out.store.restore(*p)) ++out.corrupt;
        pos = end + 1;
    }
    return out;
}

inline TrackLoad read_tracks(const std::string& path, TrackParams params = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path);
    return read_tracks(in, params);
}

}  // namespace fwatch::track
