#include <algorithm>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "fwatch/track/store.hpp"

using namespace fwatch;
using namespace fwatch::track;
using namespace std::chrono_literals;

namespace {
const UtcSeconds t0 = *parse_iso8601("2015-06-01T00:00:00Z");
const Mmsi kVessel{412345678};

TrackPoint pt(std::int64_t sec, double lat, double lon, std::optional<double> sog = std::nullopt, Mmsi m = kVessel) {
    return {m, t0 + std::chrono::seconds(sec), lat, lon, sog, std::nullopt};
}
}  // namespace

TEST(ImpliedSpeed, TenthOfADegreeAlongEquatorInOneHour) {
    // 0.1 deg of arc with R = 6371 km is 11.1195 km; / 1.852 = 6.0041 kn.
    const double v = derive_implied_speed(pt(0, 0.0, 0.0), pt(3600, 0.0, 0.1));
    EXPECT_NEAR(v, 6.00, 0.02);
    EXPECT_NEAR(v, 6.00405, 1e-4);
}

TEST(ImpliedSpeed, ZeroDistanceAndZeroDelta) {
    EXPECT_EQ(derive_implied_speed(pt(0, 10.0, 20.0), pt(600, 10.0, 20.0)), 0.0);
    EXPECT_THROW(derive_implied_speed(pt(5, 1.0, 1.0), pt(5, 2.0, 2.0)), Error);
}

TEST(ImpliedSpeed, SymmetricAndNonNegative) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lat(-89, 89), lon(-179, 179);
    for (int i = 0; i < 1000; ++i) {
        const auto a = pt(0, lat(rng), lon(rng));
        const auto b = pt(1 + static_cast<std::int64_t>(rng() % 100000), lat(rng), lon(rng));
        const double ab = derive_implied_speed(a, b), ba = derive_implied_speed(b, a);
        EXPECT_EQ(ab, ba);
        EXPECT_GE(ab, 0.0);
    }
}

TEST(TrackStore, OutOfOrderArrivalIsSorted) {
    TrackStore s;
    EXPECT_EQ(s.ingest(pt(10, 0, 0)), Disposition::Accepted);
    EXPECT_EQ(s.ingest(pt(30, 0, 0.0001)), Disposition::Accepted);
    EXPECT_EQ(s.ingest(pt(20, 0, 0.00005)), Disposition::Accepted);
    const auto& t = s.track(kVessel);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].t, t0 + 10s);
    EXPECT_EQ(t[1].t, t0 + 20s);
    EXPECT_EQ(t[2].t, t0 + 30s);
    EXPECT_FALSE(t[0].speed_implied);
    EXPECT_DOUBLE_EQ(*t[2].speed_implied, derive_implied_speed(t[1], t[2]));
}

TEST(TrackStore, FirstArrivalWinsOnDuplicate) {
    TrackStore s;
    s.ingest(pt(10, 1.0, 1.0));
    EXPECT_EQ(s.ingest(pt(10, 1.001, 1.0)), Disposition::DuplicateTimestamp);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(s.track(kVessel)[0].latitude, 1.0);
    EXPECT_EQ(s.stats().duplicates, 1u);
}

TEST(TrackStore, RejectsOneDegreeInOneMinute) {
    // 1 deg of latitude = 111.19 km; over 60 s that is ~3602 kn.
    TrackStore s;
    s.ingest(pt(0, 10.0, 10.0));
    EXPECT_EQ(s.ingest(pt(60, 11.0, 10.0)), Disposition::SpeedSpike);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(s.stats().spikes, 1u);
}

TEST(TrackStore, RejectsMissingCoordinates) {
    TrackStore s;
    ais::PositionReport r;
    r.message_type = 1;
    r.mmsi = kVessel;
    EXPECT_EQ(s.ingest(r, t0), Disposition::InvalidCoordinate);
    r.latitude = 91.0;
    r.longitude = 0.0;
    EXPECT_EQ(s.ingest(r, t0), Disposition::InvalidCoordinate);
    EXPECT_EQ(s.size(), 0u);
}

TEST(TrackStore, ShuffledIngestIsMonotonicAndIdempotent) {
    std::mt19937_64 rng(5);
    std::vector<TrackPoint> pts;
    for (int v = 0; v < 4; ++v)
        for (int i = 0; i < 200; ++i)
            pts.push_back(pt(i * 60 + static_cast<int>(rng() % 30), 5.0 + v, 0.0005 * i, 3.0,
                             Mmsi{static_cast<std::uint32_t>(412000000 + v)}));
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(pts.begin(), pts.end(), rng);
        TrackStore once;
        for (const auto& p : pts) once.ingest(p);
        for (const auto& [m, t] : once.tracks())
            for (std::size_t i = 1; i < t.size(); ++i) ASSERT_LT(t[i - 1].t, t[i].t);
        TrackStore twice = once;
        for (const auto& p : pts) twice.ingest(p);
        EXPECT_EQ(once, twice);
        EXPECT_EQ(once.size(), pts.size());
    }
}

TEST(SegmentByGap, SplitsAtThreshold) {
    std::vector<TrackPoint> t = {pt(0, 0, 0), pt(3600, 0, 0), pt(3600 + 13 * 3600, 0, 0), pt(3600 + 14 * 3600, 0, 0)};
    const auto segs = segment_by_gap(t, 12h);
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0].points.size(), 2u);
    EXPECT_EQ(segs[1].start(), t[2].t);
    EXPECT_EQ(segment_by_gap(std::vector<TrackPoint>{}, 12h).size(), 0u);
    EXPECT_EQ(segment_by_gap(std::vector<TrackPoint>(t.begin(), t.begin() + 2), 12h).size(), 1u);
    const std::vector<TrackPoint> exact = {pt(0, 0, 0), pt(12 * 3600, 0, 0)};
    EXPECT_EQ(segment_by_gap(exact, 12h).size(), 2u);
}

TEST(SegmentByGap, IsAPartition) {
    std::mt19937_64 rng(9);
    std::vector<TrackPoint> t;
    std::int64_t sec = 0;
    for (int i = 0; i < 500; ++i) {
        sec += 1 + static_cast<std::int64_t>(rng() % 30000);
        t.push_back(pt(sec, 0, 0));
    }
    std::vector<TrackPoint> joined;
    for (const auto& s : segment_by_gap(t, 6h)) {
        ASSERT_FALSE(s.points.empty());
        for (std::size_t i = 1; i < s.points.size(); ++i) EXPECT_LT(s.points[i].t - s.points[i - 1].t, 6h);
        joined.insert(joined.end(), s.points.begin(), s.points.end());
    }
    EXPECT_EQ(joined, t);
}

TEST(ShardedTrackStore, ConcurrentWritersMatchSerial) {
    std::vector<TrackPoint> pts;
    for (int v = 0; v < 8; ++v)
        for (int i = 0; i < 300; ++i)
            pts.push_back(pt(i * 60, 1.0 + v, 0.001 * i, 2.0, Mmsi{static_cast<std::uint32_t>(300000000 + v)}));
    TrackStore serial;
    for (const auto& p : pts) serial.ingest(p);

    ShardedTrackStore sharded(4);
    std::vector<std::thread> writers;
    for (int w = 0; w < 4; ++w)
        writers.emplace_back([&, w] {
            for (const auto& p : pts)
                if (p.mmsi.value % 4 == static_cast<std::uint32_t>(w)) sharded.ingest(p);
        });
    for (auto& th : writers) th.join();
    EXPECT_EQ(*sharded.snapshot(), serial);
}
