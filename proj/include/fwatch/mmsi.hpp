#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace fwatch {

/// Maritime Mobile Service Identity, always rendered as nine digits.
struct Mmsi {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const Mmsi&) const = default;

    static constexpr std::uint32_t max_value = 999'999'999;

    constexpr bool valid() const noexcept { return value > 0 && value <= max_value; }

    std::string str() const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%09u", value);
        return buf;
    }

    /// Exactly nine decimal digits.
    static std::optional<Mmsi> parse(std::string_view s) {
        if (s.size() != 9) return std::nullopt;
        std::uint32_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + static_cast<std::uint32_t>(c - '0');
        }
        return Mmsi{v};
    }
};

}  // namespace fwatch

template <>
struct std::hash<fwatch::Mmsi> {
    std::size_t operator()(const fwatch::Mmsi& m) const noexcept { return std::hash<std::uint32_t>{}(m.value); }
};
