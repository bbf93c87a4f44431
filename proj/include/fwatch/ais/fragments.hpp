#pragma once

#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwatch/ais/frame.hpp"
#include "fwatch/time.hpp"

namespace fwatch::ais {

struct AssembledPayload {
    std::string payload;
    int fill_bits = 0;
    int fragment_count = 1;
    char channel = 0;

    bool operator==(const AssembledPayload&) const = default;
};

/// Result of offering one frame to the assembler. Discarded counts are in
/// lines (fragments), so callers can keep per-line accounting exact.
struct AssemblyOutcome {
    std::optional<AssembledPayload> complete;
    std::size_t timed_out_fragments = 0;
    std::size_t reset_fragments = 0;
};

/// Reassembles multi-sentence messages keyed by (sequential id, channel).
/// Not thread-safe; use one instance per input stream.
class FragmentAssembler {
public:
    explicit FragmentAssembler(std::chrono::seconds timeout = std::chrono::seconds{60}) : timeout_(timeout) {}

    AssemblyOutcome add(const AivdmFrame& frame, UtcSeconds now) {
        AssemblyOutcome out;
        out.timed_out_fragments = expire(now);
        if (frame.fragment_count == 1) {
            out.complete = AssembledPayload{frame.payload, frame.fill_bits, 1, frame.channel};
            return out;
        }

        const Key key{frame.sequential_id.value_or(-1), frame.channel};
        auto it = groups_.find(key);
        if (it != groups_.end()) {
            Group& g = it->second;
            // A repeated index or a changed fragment count means the group
            // was interleaved with another message: start over.
            if (g.count != frame.fragment_count || g.seen[static_cast<std::size_t>(frame.fragment_index - 1)]) {
                out.reset_fragments = g.received;
                groups_.erase(it);
                it = groups_.end();
            }
        }
        if (it == groups_.end()) {
            Group g;
            g.count = frame.fragment_count;
            g.started = now;
            g.parts.resize(static_cast<std::size_t>(g.count));
            g.seen.assign(static_cast<std::size_t>(g.count), false);
            it = groups_.emplace(key, std::move(g)).first;
        }

        Group& g = it->second;
        const auto idx = static_cast<std::size_t>(frame.fragment_index - 1);
        g.parts[idx] = frame.payload;
        g.seen[idx] = true;
        if (frame.fragment_index == frame.fragment_count) g.fill_bits = frame.fill_bits;
        ++g.received;
        if (g.received == static_cast<std::size_t>(g.count)) {
            AssembledPayload done;
            for (const auto& p : g.parts) done.payload += p;
            done.fill_bits = g.fill_bits;
            done.fragment_count = g.count;
            done.channel = frame.channel;
            groups_.erase(it);
            out.complete = std::move(done);
        }
        return out;
    }

    /// Fragments held in incomplete groups.
    std::size_t pending_fragments() const noexcept {
        std::size_t n = 0;
        for (const auto& [k, g] : groups_) n += g.received;
        return n;
    }

    std::size_t pending_groups() const noexcept { return groups_.size(); }

private:
    struct Key {
        int sequential_id;
        char channel;
        auto operator<=>(const Key&) const = default;
    };
    struct Group {
        int count = 0;
        int fill_bits = 0;
        UtcSeconds started{};
        std::size_t received = 0;
        std::vector<std::string> parts;
        std::vector<bool> seen;
    };

    std::size_t expire(UtcSeconds now) {
        std::size_t dropped = 0;
        for (auto it = groups_.begin(); it != groups_.end();) {
            if (now - it->second.started > timeout_) {
                dropped += it->second.received;
                it = groups_.erase(it);
            } else {
                ++it;
            }
        }
        return dropped;
    }

    std::chrono::seconds timeout_;
    std::map<Key, Group> groups_;
};

}  // namespace fwatch::ais
