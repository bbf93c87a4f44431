#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace fwatch::ais {

/// One bit field of an AIS message as transcribed from ITU-R M.1371.
/// `sentinel` is the raw value meaning "not available"; engineering units
/// are `raw / divisor`.
struct FieldLayout {
    std::string_view name;
    std::uint16_t offset = 0;
    std::uint8_t width = 0;
    bool is_signed = false;
    double divisor = 1.0;
    bool has_sentinel = false;
    std::int64_t sentinel = 0;

    constexpr std::size_t end() const noexcept { return std::size_t{offset} + width; }
};

constexpr FieldLayout unsigned_field(std::string_view name, std::uint16_t offset, std::uint8_t width,
                                     double divisor = 1.0) {
    return {name, offset, width, false, divisor, false, 0};
}
constexpr FieldLayout unsigned_field(std::string_view name, std::uint16_t offset, std::uint8_t width,
                                     double divisor, std::int64_t sentinel) {
    return {name, offset, width, false, divisor, true, sentinel};
}
constexpr FieldLayout signed_field(std::string_view name, std::uint16_t offset, std::uint8_t width,
                                   double divisor, std::int64_t sentinel) {
    return {name, offset, width, true, divisor, true, sentinel};
}
constexpr FieldLayout text_field(std::string_view name, std::uint16_t offset, std::uint8_t width) {
    return {name, offset, width, false, 1.0, false, 0};
}

constexpr std::size_t min_bits(std::initializer_list<FieldLayout> fields) {
    std::size_t n = 0;
    for (const auto& f : fields) n = std::max(n, f.end());
    return n;
}

inline constexpr FieldLayout message_type_field = unsigned_field("type", 0, 6);
inline constexpr FieldLayout mmsi_field = unsigned_field("mmsi", 8, 30);

/// Lat/lon are 1/10000 arc-minute units.
inline constexpr double position_divisor = 600000.0;

struct PositionLayout {
    FieldLayout sog;
    FieldLayout lon;
    FieldLayout lat;
    FieldLayout cog;
    FieldLayout heading;
    FieldLayout second;

    constexpr std::size_t required_bits() const {
        return min_bits({mmsi_field, sog, lon, lat, cog, heading, second});
    }
};

/// Types 1, 2, 3: Class A position report.
inline constexpr PositionLayout class_a_position{
    unsigned_field("sog", 50, 10, 10.0, 1023),
    signed_field("lon", 61, 28, position_divisor, 181 * 600000),
    signed_field("lat", 89, 27, position_divisor, 91 * 600000),
    unsigned_field("cog", 116, 12, 10.0, 3600),
    unsigned_field("heading", 128, 9, 1.0, 511),
    unsigned_field("second", 137, 6, 1.0, 60),
};

/// Types 18 and 19: Class B position report (standard and extended share
/// the kinematic fields).
inline constexpr PositionLayout class_b_position{
    unsigned_field("sog", 46, 10, 10.0, 1023),
    signed_field("lon", 57, 28, position_divisor, 181 * 600000),
    signed_field("lat", 85, 27, position_divisor, 91 * 600000),
    unsigned_field("cog", 112, 12, 10.0, 3600),
    unsigned_field("heading", 124, 9, 1.0, 511),
    unsigned_field("second", 133, 6, 1.0, 60),
};

/// Type 5: static and voyage related data.
struct StaticVoyageLayout {
    FieldLayout imo = unsigned_field("imo", 40, 30);
    FieldLayout callsign = text_field("callsign", 70, 42);
    FieldLayout name = text_field("shipname", 112, 120);
    FieldLayout ship_type = unsigned_field("shiptype", 232, 8);

    constexpr std::size_t required_bits() const { return min_bits({mmsi_field, imo, callsign, name, ship_type}); }
};
inline constexpr StaticVoyageLayout static_voyage{};

/// Type 24: static data report, part A (name) and part B (type, callsign).
struct StaticDataLayout {
    FieldLayout part = unsigned_field("partno", 38, 2);
    FieldLayout name = text_field("shipname", 40, 120);
    FieldLayout ship_type = unsigned_field("shiptype", 40, 8);
    FieldLayout callsign = text_field("callsign", 90, 42);

    constexpr std::size_t part_a_bits() const { return min_bits({mmsi_field, part, name}); }
    constexpr std::size_t part_b_bits() const { return min_bits({mmsi_field, part, ship_type, callsign}); }
};
inline constexpr StaticDataLayout static_data{};

static_assert(class_a_position.required_bits() == 143);
static_assert(class_b_position.required_bits() == 139);
static_assert(static_voyage.required_bits() == 240);
static_assert(static_data.part_a_bits() == 160);

}  // namespace fwatch::ais
