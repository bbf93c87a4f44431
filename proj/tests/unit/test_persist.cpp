#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fwatch/track/persist.hpp"

using namespace fwatch;
using namespace fwatch::track;

namespace {
TrackStore sample_store(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> jitter(-0.001, 0.001);
    TrackStore s;
    const auto t0 = *parse_iso8601("2015-02-01T00:00:00Z");
    for (std::size_t i = 0; i < n; ++i) {
        const Mmsi m{static_cast<std::uint32_t>(366000001 + i % 3)};
        std::optional<double> sog;
        if (i % 4) sog = 0.1 * static_cast<double>(i % 60);
        s.ingest(TrackPoint{m, t0 + std::chrono::seconds(60 * (i / 3)), 10.0 + jitter(rng), -20.0 + 1e-4 * i + jitter(rng),
                            sog, std::nullopt});
    }
    return s;
}
}  // namespace

TEST(Persist, RoundTripIsExact) {
    const auto store = sample_store(1000);
    ASSERT_EQ(store.size(), 1000u);
    std::stringstream buf;
    write_tracks(store, buf);
    const auto load = read_tracks(buf);
    EXPECT_EQ(load.store, store);
    EXPECT_EQ(load.truncated, 0u);
    EXPECT_EQ(load.corrupt, 0u);
}

TEST(Persist, FileRoundTrip) {
    const auto path = (std::filesystem::temp_directory_path() / "fwatch_persist_test.txt").string();
    const auto store = sample_store(50);
    write_tracks(store, path);
    EXPECT_EQ(read_tracks(path).store, store);
    std::filesystem::remove(path);
    EXPECT_THROW(read_tracks(path), Error);
}

TEST(Persist, EmptyStoreIsHeaderOnly) {
    std::stringstream buf;
    write_tracks(TrackStore{}, buf);
    EXPECT_EQ(buf.str(), "fwatch-tracks v1\n");
    EXPECT_EQ(read_tracks(buf).store.size(), 0u);
}

TEST(Persist, ColumnFormat) {
    TrackStore s;
    s.ingest(TrackPoint{Mmsi{5}, *parse_iso8601("2015-02-01T00:00:00Z"), 1.5, -2.25, std::nullopt, std::nullopt});
    std::stringstream buf;
    write_tracks(s, buf);
    EXPECT_EQ(buf.str(), "fwatch-tracks v1\n000000005,2015-02-01T00:00:00Z,1.5,-2.25,,\n");
}

TEST(Persist, TruncatedTailIsDropped) {
    const auto store = sample_store(30);
    std::stringstream buf;
    write_tracks(store, buf);
    auto text = buf.str();
    text.resize(text.size() - 10);
    std::istringstream in(text);
    const auto load = read_tracks(in);
    EXPECT_EQ(load.truncated, 1u);
    EXPECT_EQ(load.store.size(), 29u);
}

TEST(Persist, BadHeaderThrows) {
    std::istringstream in("fwatch-tracks v2\n");
    try {
        read_tracks(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CorruptHeader);
    }
    std::istringstream empty("");
    EXPECT_THROW(read_tracks(empty), Error);
}
