#pragma once

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fwatch/ais/checksum.hpp"
#include "fwatch/ais/fragments.hpp"
#include "fwatch/ais/frame.hpp"
#include "fwatch/ais/messages.hpp"
#include "fwatch/error.hpp"
#include "fwatch/time.hpp"

namespace fwatch::ais {

/// One line of a feed log: `<ISO-8601 UTC>\t<sentence>`.
struct RawLine {
    UtcSeconds received_at{};
    std::string sentence;
};

/// Returns nullopt for blank lines and `#` comments.
inline std::optional<RawLine> parse_log_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') return std::nullopt;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw Error(Errc::BadTimestamp, "no tab separator");
    const auto t = parse_iso8601(text::trim(line.substr(0, tab)));
    if (!t || !in_feed_range(*t)) throw Error(Errc::BadTimestamp, std::string(line.substr(0, tab)));
    return RawLine{*t, std::string(line.substr(tab + 1))};
}

struct DecodedRecord {
    UtcSeconds received_at{};
    DecodedMessage message;
};

/// Per-stream line accounting. Every content line ends up in exactly one of
/// `accepted`, an error bucket, or `pending_fragments`.
struct DecodeStats {
    std::size_t lines_read = 0;
    std::size_t accepted = 0;
    std::size_t messages = 0;
    std::size_t pending_fragments = 0;
    std::map<Errc, std::size_t> errors;

    std::size_t count(Errc e) const {
        auto it = errors.find(e);
        return it == errors.end() ? 0 : it->second;
    }
    std::size_t error_total() const {
        std::size_t n = 0;
        for (const auto& [e, c] : errors) n += c;
        return n;
    }
    bool conserved() const { return accepted + error_total() + pending_fragments == lines_read; }
};

/// Stateful decoder for one input stream. Independent instances share no
/// state and may run on separate threads.
class StreamDecoder {
public:
    explicit StreamDecoder(std::chrono::seconds fragment_timeout = std::chrono::seconds{60})
        : assembler_(fragment_timeout) {}

    std::optional<DecodedRecord> feed(const RawLine& line) { return feed(line.received_at, line.sentence); }

    std::optional<DecodedRecord> feed(UtcSeconds received_at, std::string_view sentence) {
        ++stats_.lines_read;
        std::optional<DecodedRecord> out;
        std::size_t lines_in_message = 1;
        try {
            if (!in_feed_range(received_at)) throw Error(Errc::BadTimestamp);
            const auto frame = parse_frame(verify_checksum(sentence));
            auto outcome = assembler_.add(frame, received_at);
            bump(Errc::FragmentTimeout, outcome.timed_out_fragments);
            bump(Errc::DuplicateFragment, outcome.reset_fragments);
            if (outcome.complete) {
                lines_in_message = static_cast<std::size_t>(outcome.complete->fragment_count);
                const auto bits = unarmor(outcome.complete->payload, outcome.complete->fill_bits);
                out = DecodedRecord{received_at, decode_message(bits)};
                stats_.accepted += lines_in_message;
                ++stats_.messages;
            }
        } catch (const Error& e) {
            bump(e.code(), lines_in_message);
        }
        stats_.pending_fragments = assembler_.pending_fragments();
        return out;
    }

    /// Feeds one raw log line; comments and blank lines are not counted.
    std::optional<DecodedRecord> feed_log_line(std::string_view line) {
        std::optional<RawLine> raw;
        try {
            raw = parse_log_line(line);
        } catch (const Error& e) {
            ++stats_.lines_read;
            bump(e.code(), 1);
            return std::nullopt;
        }
        if (!raw) return std::nullopt;
        return feed(*raw);
    }

    const DecodeStats& stats() const noexcept { return stats_; }

private:
    void bump(Errc e, std::size_t n) {
        if (n) stats_.errors[e] += n;
    }

    FragmentAssembler assembler_;
    DecodeStats stats_;
};

struct DecodeResult {
    std::vector<DecodedRecord> records;
    DecodeStats stats;
};

inline DecodeResult decode_stream(std::span<const RawLine> lines,
                                  std::chrono::seconds fragment_timeout = std::chrono::seconds{60}) {
    StreamDecoder dec(fragment_timeout);
    DecodeResult out;
    for (const auto& l : lines)
        if (auto r = dec.feed(l)) out.records.push_back(std::move(*r));
    out.stats = dec.stats();
    return out;
}

inline DecodeResult decode_log(std::istream& in, std::chrono::seconds fragment_timeout = std::chrono::seconds{60}) {
    StreamDecoder dec(fragment_timeout);
    DecodeResult out;
    std::string line;
    while (std::getline(in, line))
        if (auto r = dec.feed_log_line(line)) out.records.push_back(std::move(*r));
    out.stats = dec.stats();
    return out;
}

}  // namespace fwatch::ais
