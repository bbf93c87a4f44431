#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "fwatch/ais/armor.hpp"
#include "fwatch/ais/layout.hpp"
#include "fwatch/ais/ship_types.hpp"
#include "fwatch/error.hpp"
#include "fwatch/mmsi.hpp"

namespace fwatch::ais {

/// Kinematic report from message types 1, 2, 3, 18 and 19. Every optional
/// is empty when the raw field held its "not available" sentinel or an
/// out-of-range value.
struct PositionReport {
    int message_type = 0;
    Mmsi mmsi;
    std::optional<double> latitude;
    std::optional<double> longitude;
    std::optional<double> sog;
    std::optional<double> cog;
    std::optional<int> true_heading;
    std::optional<int> utc_second;

    bool operator==(const PositionReport&) const = default;

    bool has_position() const noexcept { return latitude && longitude; }
};

/// Identity report from message types 5 and 24.
struct StaticReport {
    int message_type = 0;
    Mmsi mmsi;
    std::string vessel_name;
    std::string callsign;
    std::optional<std::uint32_t> imo_number;
    std::optional<int> ship_type_code;
    bool self_id_fishing = false;
    /// 'A' or 'B' for type 24, empty for type 5.
    std::optional<char> part;

    bool operator==(const StaticReport&) const = default;
};

using DecodedMessage = std::variant<PositionReport, StaticReport>;

inline int message_type(const BitField& bits) {
    return static_cast<int>(bits.get_unsigned(message_type_field.offset, message_type_field.width));
}

constexpr bool is_position_type(int t) noexcept { return t == 1 || t == 2 || t == 3 || t == 18 || t == 19; }
constexpr bool is_static_type(int t) noexcept { return t == 5 || t == 24; }

namespace detail {

inline Mmsi read_mmsi(const BitField& bits) {
    const auto raw = bits.get_unsigned(mmsi_field.offset, mmsi_field.width);
    const Mmsi m{static_cast<std::uint32_t>(raw)};
    if (!m.valid()) throw Error(Errc::MmsiOutOfRange, std::to_string(raw));
    return m;
}

/// Reads a scaled field; sentinel and anything outside [lo, hi] is Unavailable.
inline std::optional<double> read_scaled(const BitField& bits, const FieldLayout& f, double lo, double hi) {
    const std::int64_t raw = f.is_signed ? bits.get_signed(f.offset, f.width)
                                         : static_cast<std::int64_t>(bits.get_unsigned(f.offset, f.width));
    if (f.has_sentinel && raw == f.sentinel) return std::nullopt;
    const double v = static_cast<double>(raw) / f.divisor;
    if (v < lo || v > hi) return std::nullopt;
    return v;
}

inline std::optional<int> read_bounded(const BitField& bits, const FieldLayout& f, int max_valid) {
    const auto raw = static_cast<std::int64_t>(bits.get_unsigned(f.offset, f.width));
    if ((f.has_sentinel && raw == f.sentinel) || raw > max_valid) return std::nullopt;
    return static_cast<int>(raw);
}

/// Cuts at the first '@' padding character, then trims spaces.
inline std::string clean_text(std::string s) {
    if (auto at = s.find('@'); at != std::string::npos) s.resize(at);
    const auto b = s.find_first_not_of(' ');
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

inline void require_bits(const BitField& bits, std::size_t n) {
    if (bits.size() < n)
        throw Error(Errc::TruncatedPayload, std::to_string(bits.size()) + " < " + std::to_string(n) + " bits");
}

}  // namespace detail

inline PositionReport decode_position_report(const BitField& bits) {
    const int type = message_type(bits);
    if (!is_position_type(type)) throw Error(Errc::UnsupportedType, "type " + std::to_string(type));
    const PositionLayout& layout = type <= 3 ? class_a_position : class_b_position;
    detail::require_bits(bits, layout.required_bits());

    PositionReport r;
    r.message_type = type;
    r.mmsi = detail::read_mmsi(bits);
    r.sog = detail::read_scaled(bits, layout.sog, 0.0, 102.2);
    r.longitude = detail::read_scaled(bits, layout.lon, -180.0, 180.0);
    r.latitude = detail::read_scaled(bits, layout.lat, -90.0, 90.0);
    r.cog = detail::read_scaled(bits, layout.cog, 0.0, 359.9);
    r.true_heading = detail::read_bounded(bits, layout.heading, 359);
    r.utc_second = detail::read_bounded(bits, layout.second, 59);
    return r;
}

inline StaticReport decode_static_report(const BitField& bits) {
    const int type = message_type(bits);
    if (!is_static_type(type)) throw Error(Errc::UnsupportedType, "type " + std::to_string(type));

    StaticReport r;
    r.message_type = type;
    if (type == 5) {
        const auto& l = static_voyage;
        detail::require_bits(bits, l.required_bits());
        r.mmsi = detail::read_mmsi(bits);
        if (auto imo = bits.get_unsigned(l.imo.offset, l.imo.width); imo != 0)
            r.imo_number = static_cast<std::uint32_t>(imo);
        r.callsign = detail::clean_text(bits.get_text(l.callsign.offset, l.callsign.width));
        r.vessel_name = detail::clean_text(bits.get_text(l.name.offset, l.name.width));
        r.ship_type_code = detail::read_bounded(bits, l.ship_type, 99);
    } else {
        const auto& l = static_data;
        detail::require_bits(bits, l.part.end());
        const auto part = bits.get_unsigned(l.part.offset, l.part.width);
        if (part == 0) {
            detail::require_bits(bits, l.part_a_bits());
            r.mmsi = detail::read_mmsi(bits);
            r.part = 'A';
            r.vessel_name = detail::clean_text(bits.get_text(l.name.offset, l.name.width));
        } else if (part == 1) {
            detail::require_bits(bits, l.part_b_bits());
            r.mmsi = detail::read_mmsi(bits);
            r.part = 'B';
            r.ship_type_code = detail::read_bounded(bits, l.ship_type, 99);
            r.callsign = detail::clean_text(bits.get_text(l.callsign.offset, l.callsign.width));
        } else {
            throw Error(Errc::UnsupportedType, "type 24 part " + std::to_string(part));
        }
    }
    r.self_id_fishing = r.ship_type_code == fishing_ship_type;
    return r;
}

inline DecodedMessage decode_message(const BitField& bits) {
    const int type = message_type(bits);
    if (is_position_type(type)) return decode_position_report(bits);
    if (is_static_type(type)) return decode_static_report(bits);
    throw Error(Errc::UnsupportedType, "type " + std::to_string(type));
}

inline Mmsi mmsi_of(const DecodedMessage& m) {
    return std::visit([](const auto& r) { return r.mmsi; }, m);
}

}  // namespace fwatch::ais
