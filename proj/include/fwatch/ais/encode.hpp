#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwatch/ais/armor.hpp"
#include "fwatch/ais/checksum.hpp"
#include "fwatch/ais/messages.hpp"

// Encoding side of the codec. Used to synthesize feeds for tests and demo
// fixtures; fields the decoder does not surface are written as defaults.

namespace fwatch::ais {

namespace detail {

inline void append_text(BitField& bits, std::string_view s, unsigned chars) {
    for (unsigned i = 0; i < chars; ++i) {
        char c = i < s.size() ? static_cast<char>(std::toupper(static_cast<unsigned char>(s[i]))) : '@';
        auto u = static_cast<unsigned char>(c);
        std::uint8_t v = (u >= 64 && u <= 95) ? static_cast<std::uint8_t>(u - 64)
                         : (u >= 32 && u <= 63) ? static_cast<std::uint8_t>(u)
                                                : std::uint8_t{32};
        bits.append(v, 6);
    }
}

inline std::uint64_t scaled_or(std::optional<double> v, double divisor, std::int64_t sentinel, unsigned width) {
    const std::int64_t raw = v ? static_cast<std::int64_t>(std::llround(*v * divisor)) : sentinel;
    return static_cast<std::uint64_t>(raw) & ((std::uint64_t{1} << width) - 1);
}

}  // namespace detail

inline BitField encode_position(const PositionReport& r, int nav_status = 7) {
    BitField b;
    const auto& l = r.message_type <= 3 ? class_a_position : class_b_position;
    b.append(static_cast<std::uint64_t>(r.message_type), 6);
    b.append(0, 2);
    b.append(r.mmsi.value, 30);
    if (r.message_type <= 3) {
        b.append(static_cast<std::uint64_t>(nav_status), 4);
        b.append(0x80, 8);  // rate of turn not available
    } else {
        b.append(0, 8);
    }
    b.append(detail::scaled_or(r.sog, 10.0, 1023, 10), 10);
    b.append(0, 1);
    b.append(detail::scaled_or(r.longitude, position_divisor, l.lon.sentinel, 28), 28);
    b.append(detail::scaled_or(r.latitude, position_divisor, l.lat.sentinel, 27), 27);
    b.append(detail::scaled_or(r.cog, 10.0, 3600, 12), 12);
    b.append(static_cast<std::uint64_t>(r.true_heading.value_or(511)), 9);
    b.append(static_cast<std::uint64_t>(r.utc_second.value_or(60)), 6);
    if (r.message_type <= 3) {
        b.append(0, 2 + 3 + 1);
        b.append(0, 19);
    } else {
        b.append(0, 2);
        b.append(0b1100000, 7);  // CS unit, no display
        b.append(0, 20);
    }
    return b;
}

inline BitField encode_static(const StaticReport& r) {
    BitField b;
    b.append(static_cast<std::uint64_t>(r.message_type), 6);
    b.append(0, 2);
    b.append(r.mmsi.value, 30);
    if (r.message_type == 5) {
        b.append(0, 2);
        b.append(r.imo_number.value_or(0), 30);
        detail::append_text(b, r.callsign, 7);
        detail::append_text(b, r.vessel_name, 20);
        b.append(static_cast<std::uint64_t>(r.ship_type_code.value_or(0)), 8);
        b.append(0, 9 + 9 + 6 + 6);
        b.append(1, 4);
        b.append(0, 4 + 5 + 5 + 6 + 8);
        detail::append_text(b, "", 20);
        b.append(0, 2);
    } else if (r.part.value_or('A') == 'A') {
        b.append(0, 2);
        detail::append_text(b, r.vessel_name, 20);
        b.append(0, 8);
    } else {
        b.append(1, 2);
        b.append(static_cast<std::uint64_t>(r.ship_type_code.value_or(0)), 8);
        detail::append_text(b, "", 7);
        detail::append_text(b, r.callsign, 7);
        b.append(0, 30 + 6);
    }
    return b;
}

/// Wraps a body in `!...*hh`.
inline std::string make_sentence(std::string_view body) {
    char hex[4];
    std::snprintf(hex, sizeof hex, "%02X", xor_fold(body));
    return "!" + std::string(body) + "*" + hex;
}

/// Splits a message into as many `!AIVDM` sentences as needed.
inline std::vector<std::string> to_sentences(const BitField& bits, std::optional<int> sequential_id = std::nullopt,
                                             char channel = 'A', std::size_t max_chars = 60) {
    const auto armored = armor(bits);
    const std::size_t n = armored.payload.empty() ? 1 : (armored.payload.size() + max_chars - 1) / max_chars;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        const bool last = i + 1 == n;
        std::string body = "AIVDM," + std::to_string(n) + "," + std::to_string(i + 1) + ",";
        if (n > 1 && sequential_id) body += std::to_string(*sequential_id);
        body += ",";
        if (channel) body += channel;
        body += "," + armored.payload.substr(i * max_chars, max_chars) + ",";
        body += std::to_string(last ? armored.fill_bits : 0);
        out.push_back(make_sentence(body));
    }
    return out;
}

}  // namespace fwatch::ais
