#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fwatch/error.hpp"

namespace fwatch::ais {

/// True for the 64 characters of the AIVDM payload alphabet
/// (ASCII 48..87 and 96..119).
constexpr bool is_armor_char(char c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    return (u >= 48 && u <= 87) || (u >= 96 && u <= 119);
}

constexpr std::uint8_t armor_value(char c) noexcept {
    int v = static_cast<unsigned char>(c) - 48;
    if (v > 40) v -= 8;
    return static_cast<std::uint8_t>(v);
}

constexpr char armor_char(std::uint8_t sixbit) noexcept {
    return static_cast<char>(sixbit < 40 ? sixbit + 48 : sixbit + 56);
}

/// 6-bit ASCII used for AIS text fields: 0..31 map to '@'..'_', 32..63 to ' '..'?'.
constexpr char sixbit_ascii(std::uint8_t v) noexcept {
    return static_cast<char>(v < 32 ? v + 64 : v);
}

/// Packed MSB-first bit sequence with bounds-checked field access.
class BitField {
public:
    BitField() = default;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool bit(std::size_t i) const noexcept { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }

    void push_back(bool b) {
        if ((size_ & 7) == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
        ++size_;
    }

    /// Appends the low `width` bits of `value`, most significant first.
    void append(std::uint64_t value, unsigned width) {
        for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
    }

    /// Drops bits from the end.
    void truncate(std::size_t new_size) {
        if (new_size >= size_) return;
        size_ = new_size;
        bytes_.resize((size_ + 7) / 8);
        if (size_ & 7) bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (size_ & 7));
    }

    std::uint64_t get_unsigned(std::size_t offset, unsigned width) const {
        if (width > 64) throw Error(Errc::TruncatedPayload, "integer field wider than 64 bits");
        check(offset, width);
        std::uint64_t v = 0;
        for (std::size_t i = offset; i < offset + width; ++i) v = (v << 1) | bit(i);
        return v;
    }

    std::int64_t get_signed(std::size_t offset, unsigned width) const {
        const std::uint64_t raw = get_unsigned(offset, width);
        if (width == 0 || width >= 64) return static_cast<std::int64_t>(raw);
        const std::uint64_t sign = std::uint64_t{1} << (width - 1);
        return static_cast<std::int64_t>(raw ^ sign) - static_cast<std::int64_t>(sign);
    }

    /// Decodes `width / 6` characters of 6-bit ASCII without trimming.
    std::string get_text(std::size_t offset, unsigned width) const {
        check(offset, width);
        std::string out;
        out.reserve(width / 6);
        for (unsigned i = 0; i + 6 <= width; i += 6)
            out += sixbit_ascii(static_cast<std::uint8_t>(get_unsigned(offset + i, 6)));
        return out;
    }

    bool operator==(const BitField&) const = default;

private:
    void check(std::size_t offset, unsigned width) const {
        if (offset + width > size_)
            throw Error(Errc::TruncatedPayload, "field [" + std::to_string(offset) + ", +" +
                                                    std::to_string(width) + ") past " +
                                                    std::to_string(size_) + " bits");
    }

    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

inline BitField unarmor(std::string_view payload, int fill_bits) {
    BitField bits;
    for (char c : payload) {
        if (!is_armor_char(c))
            throw Error(Errc::InvalidArmorChar, std::string("character '") + c + "'");
        bits.append(armor_value(c), 6);
    }
    if (fill_bits < 0 || fill_bits > 5 || static_cast<std::size_t>(fill_bits) > bits.size())
        throw Error(Errc::FillBitsOutOfRange);
    bits.truncate(bits.size() - static_cast<std::size_t>(fill_bits));
    return bits;
}

struct ArmoredPayload {
    std::string payload;
    int fill_bits = 0;

    bool operator==(const ArmoredPayload&) const = default;
};

/// Inverse of `unarmor`; the final character is zero-padded and the pad
/// width reported as fill bits.
inline ArmoredPayload armor(const BitField& bits) {
    ArmoredPayload out;
    const std::size_t chars = (bits.size() + 5) / 6;
    out.payload.reserve(chars);
    for (std::size_t c = 0; c < chars; ++c) {
        std::uint8_t v = 0;
        for (std::size_t i = c * 6; i < c * 6 + 6; ++i)
            v = static_cast<std::uint8_t>((v << 1) | (i < bits.size() ? bits.bit(i) : 0));
        out.payload += armor_char(v);
    }
    out.fill_bits = static_cast<int>(chars * 6 - bits.size());
    return out;
}

}  // namespace fwatch::ais
