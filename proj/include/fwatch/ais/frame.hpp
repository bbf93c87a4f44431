#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fwatch/ais/armor.hpp"
#include "fwatch/ais/checksum.hpp"
#include "fwatch/error.hpp"
#include "fwatch/text.hpp"

namespace fwatch::ais {

/// One `!AIVDM` / `!AIVDO` sentence after checksum validation.
struct AivdmFrame {
    int fragment_count = 1;
    int fragment_index = 1;
    std::optional<int> sequential_id;
    char channel = 0;  // 0 when the field is empty
    std::string payload;
    int fill_bits = 0;
    std::uint8_t checksum = 0;

    bool operator==(const AivdmFrame&) const = default;
};

namespace detail {
inline std::optional<int> single_digit(std::string_view s) {
    if (s.size() != 1 || s[0] < '0' || s[0] > '9') return std::nullopt;
    return s[0] - '0';
}
}  // namespace detail

/// Splits a checksum-verified body into the seven AIVDM fields.
inline AivdmFrame parse_frame(std::string_view body) {
    const auto fields = text::split(body, ',');
    if (fields.empty() || (fields[0] != "AIVDM" && fields[0] != "AIVDO"))
        throw Error(Errc::WrongTalker, std::string(fields.empty() ? body : fields[0]));
    if (fields.size() != 7)
        throw Error(Errc::FieldCountMismatch, std::to_string(fields.size()) + " fields");

    AivdmFrame f;
    const auto count = detail::single_digit(fields[1]);
    const auto index = detail::single_digit(fields[2]);
    if (!count || !index || *count < 1 || *index < 1 || *index > *count)
        throw Error(Errc::NonNumericFragmentField, "fragment count/index");
    f.fragment_count = *count;
    f.fragment_index = *index;
    if (!fields[3].empty()) {
        f.sequential_id = detail::single_digit(fields[3]);
        if (!f.sequential_id) throw Error(Errc::NonNumericFragmentField, "sequential id");
    }
    if (fields[4].size() > 1) throw Error(Errc::FieldCountMismatch, "channel field");
    f.channel = fields[4].empty() ? char{0} : fields[4][0];
    for (char c : fields[5])
        if (!is_armor_char(c)) throw Error(Errc::InvalidArmorChar, std::string("character '") + c + "'");
    f.payload = std::string(fields[5]);
    const auto fill = detail::single_digit(fields[6]);
    if (!fill || *fill > 5) throw Error(Errc::FillBitsOutOfRange, std::string(fields[6]));
    f.fill_bits = *fill;
    f.checksum = xor_fold(body);
    return f;
}

}  // namespace fwatch::ais
