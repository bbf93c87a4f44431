#pragma once

#include <cstdint>
#include <string_view>

#include "fwatch/error.hpp"

namespace fwatch::ais {

/// XOR of every byte in `body`.
constexpr std::uint8_t xor_fold(std::string_view body) noexcept {
    std::uint8_t sum = 0;
    for (char c : body) sum ^= static_cast<std::uint8_t>(c);
    return sum;
}

namespace detail {
constexpr int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace detail

/// Checks the NMEA `!body*hh` frame and returns `body`. The checksum must be
/// two uppercase hex digits; trailing whitespace after them is tolerated.
inline std::string_view verify_checksum(std::string_view sentence) {
    while (!sentence.empty() && (sentence.back() == '\r' || sentence.back() == '\n' ||
                                 sentence.back() == ' ' || sentence.back() == '\t'))
        sentence.remove_suffix(1);
    if (sentence.size() < 4 || sentence.front() != '!')
        throw Error(Errc::MalformedSentence, "sentence must start with '!'");
    const auto star = sentence.rfind('*');
    if (star == std::string_view::npos || star + 3 != sentence.size())
        throw Error(Errc::MalformedSentence, "missing '*hh' checksum suffix");
    const int hi = detail::hex_value(sentence[star + 1]);
    const int lo = detail::hex_value(sentence[star + 2]);
    if (hi < 0 || lo < 0) throw Error(Errc::MalformedSentence, "checksum is not hex");
    const auto body = sentence.substr(1, star - 1);
    if (xor_fold(body) != static_cast<std::uint8_t>(hi * 16 + lo))
        throw Error(Errc::ChecksumMismatch);
    return body;
}

}  // namespace fwatch::ais
