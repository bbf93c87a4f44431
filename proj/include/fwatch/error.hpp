#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fwatch {

enum class Errc {
    // ais
    MalformedSentence,
    ChecksumMismatch,
    WrongTalker,
    FieldCountMismatch,
    NonNumericFragmentField,
    FillBitsOutOfRange,
    InvalidArmorChar,
    UnsupportedType,
    TruncatedPayload,
    MmsiOutOfRange,
    FragmentTimeout,
    DuplicateFragment,
    BadTimestamp,
    // track
    InvalidCoordinate,
    ZeroTimeDelta,
    IoFailure,
    CorruptHeader,
    // identity
    MissingHeader,
    MmsiMismatch,
    // zone
    NotGeoJson,
    NoFeatures,
    AntimeridianRing,
    EmptyWindow,
    // grid
    InvalidGridSpec,
    InvalidBbox,
    // service
    BadConfig,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::MalformedSentence: return "malformed_sentence";
        case Errc::ChecksumMismatch: return "checksum_mismatch";
        case Errc::WrongTalker: return "wrong_talker";
        case Errc::FieldCountMismatch: return "field_count_mismatch";
        case Errc::NonNumericFragmentField: return "non_numeric_fragment_field";
        case Errc::FillBitsOutOfRange: return "fill_bits_out_of_range";
        case Errc::InvalidArmorChar: return "invalid_armor_char";
        case Errc::UnsupportedType: return "unsupported_type";
        case Errc::TruncatedPayload: return "truncated_payload";
        case Errc::MmsiOutOfRange: return "mmsi_out_of_range";
        case Errc::FragmentTimeout: return "fragment_timeout";
        case Errc::DuplicateFragment: return "duplicate_fragment";
        case Errc::BadTimestamp: return "bad_timestamp";
        case Errc::InvalidCoordinate: return "invalid_coordinate";
        case Errc::ZeroTimeDelta: return "zero_time_delta";
        case Errc::IoFailure: return "io_failure";
        case Errc::CorruptHeader: return "corrupt_header";
        case Errc::MissingHeader: return "missing_header";
        case Errc::MmsiMismatch: return "mmsi_mismatch";
        case Errc::NotGeoJson: return "not_geojson";
        case Errc::NoFeatures: return "no_features";
        case Errc::AntimeridianRing: return "antimeridian_ring";
        case Errc::EmptyWindow: return "empty_window";
        case Errc::InvalidGridSpec: return "invalid_grid_spec";
        case Errc::InvalidBbox: return "invalid_bbox";
        case Errc::BadConfig: return "bad_config";
    }
    return "unknown";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    explicit Error(Errc code) : std::runtime_error(std::string(to_string(code))), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace fwatch
