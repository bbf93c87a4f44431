#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fwatch/ais/messages.hpp"
#include "fwatch/track/track.hpp"

namespace fwatch::track {

enum class Disposition { Accepted, DuplicateTimestamp, SpeedSpike, InvalidCoordinate };

struct TrackParams {
    double spike_limit_kn = 50.0;
};

struct IngestStats {
    std::size_t accepted = 0;
    std::size_t duplicates = 0;
    std::size_t spikes = 0;
    std::size_t invalid = 0;

    void count(Disposition d) {
        switch (d) {
            case Disposition::Accepted: ++accepted; break;
            case Disposition::DuplicateTimestamp: ++duplicates; break;
            case Disposition::SpeedSpike: ++spikes; break;
            case Disposition::InvalidCoordinate: ++invalid; break;
        }
    }
    IngestStats& operator+=(const IngestStats& o) {
        accepted += o.accepted;
        duplicates += o.duplicates;
        spikes += o.spikes;
        invalid += o.invalid;
        return *this;
    }
    bool operator==(const IngestStats&) const = default;
};

/// Per-vessel, time-ordered position history.
///
/// Points may arrive out of order and are inserted at their time position.
/// The first point to arrive for a given (mmsi, t) wins. A point whose
/// implied speed from the preceding kept point exceeds the spike limit is
/// rejected. Not thread-safe; see ShardedTrackStore for concurrent writers.
class TrackStore {
public:
    using Track = std::vector<TrackPoint>;

    explicit TrackStore(TrackParams params = {}) : params_(params) {}

    Disposition ingest(const ais::PositionReport& report, UtcSeconds received_at) {
        if (!report.has_position() || !report.mmsi.valid()) return record(Disposition::InvalidCoordinate);
        TrackPoint p{report.mmsi, received_at, *report.latitude, *report.longitude, report.sog, std::nullopt};
        return ingest(p);
    }

    Disposition ingest(TrackPoint p) {
        if (!geo::valid(p.position()) || !p.mmsi.valid()) return record(Disposition::InvalidCoordinate);
        Track& track = tracks_[p.mmsi];
        auto pos = std::lower_bound(track.begin(), track.end(), p.t,
                                    [](const TrackPoint& q, UtcSeconds t) { return q.t < t; });
        if (pos != track.end() && pos->t == p.t) return record(Disposition::DuplicateTimestamp);
        p.speed_implied.reset();
        if (pos != track.begin()) {
            const double v = derive_implied_speed(*std::prev(pos), p);
            if (v > params_.spike_limit_kn) return record(Disposition::SpeedSpike);
            p.speed_implied = v;
        }
        pos = track.insert(pos, p);
        if (auto next = std::next(pos); next != track.end()) next->speed_implied = derive_implied_speed(*pos, *next);
        return record(Disposition::Accepted);
    }

    /// Inserts a previously persisted point verbatim (no spike filter, stored
    /// implied speed kept). Returns false on a duplicate timestamp.
    bool restore(const TrackPoint& p) {
        Track& track = tracks_[p.mmsi];
        if (track.empty() || track.back().t < p.t) {
            track.push_back(p);
            return true;
        }
        auto pos = std::lower_bound(track.begin(), track.end(), p.t,
                                    [](const TrackPoint& q, UtcSeconds t) { return q.t < t; });
        if (pos != track.end() && pos->t == p.t) return false;
        track.insert(pos, p);
        return true;
    }

    const Track& track(Mmsi mmsi) const {
        static const Track empty;
        auto it = tracks_.find(mmsi);
        return it == tracks_.end() ? empty : it->second;
    }

    const std::map<Mmsi, Track>& tracks() const noexcept { return tracks_; }

    std::size_t vessel_count() const noexcept { return tracks_.size(); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& [m, t] : tracks_) n += t.size();
        return n;
    }

    const IngestStats& stats() const noexcept { return stats_; }
    const TrackParams& params() const noexcept { return params_; }

    /// Moves another store's vessels in; vessels must not overlap.
    void absorb(TrackStore&& other) {
        for (auto& [m, t] : other.tracks_) tracks_[m] = std::move(t);
        stats_ += other.stats_;
    }

    /// Point-for-point equality; ingest statistics are not compared.
    bool operator==(const TrackStore& o) const { return tracks_ == o.tracks_; }

private:
    Disposition record(Disposition d) {
        stats_.count(d);
        return d;
    }

    TrackParams params_;
    std::map<Mmsi, Track> tracks_;
    IngestStats stats_;
};

/// TrackStore partitioned by MMSI so writers for different vessels can run
/// concurrently. `snapshot()` yields an immutable merged copy.
class ShardedTrackStore {
public:
    explicit ShardedTrackStore(std::size_t shards = 16, TrackParams params = {}) {
        shards_.reserve(shards);
        for (std::size_t i = 0; i < shards; ++i) shards_.push_back(std::make_unique<Shard>(params));
    }

    Disposition ingest(const ais::PositionReport& report, UtcSeconds received_at) {
        Shard& s = shard(report.mmsi);
        std::lock_guard lock(s.mutex);
        return s.store.ingest(report, received_at);
    }

    Disposition ingest(const TrackPoint& p) {
        Shard& s = shard(p.mmsi);
        std::lock_guard lock(s.mutex);
        return s.store.ingest(p);
    }

    std::shared_ptr<const TrackStore> snapshot() const {
        auto out = std::make_shared<TrackStore>(shards_.front()->store.params());
        for (const auto& s : shards_) {
            std::lock_guard lock(s->mutex);
            TrackStore copy = s->store;
            out->absorb(std::move(copy));
        }
        return out;
    }

private:
    struct Shard {
        explicit Shard(TrackParams p) : store(p) {}
        mutable std::mutex mutex;
        TrackStore store;
    };

    Shard& shard(Mmsi m) { return *shards_[m.value % shards_.size()]; }

    std::vector<std::unique_ptr<Shard>> shards_;
};

}  // namespace fwatch::track
