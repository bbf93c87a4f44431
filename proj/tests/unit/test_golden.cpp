#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "golden.hpp"

using namespace fwatch;

TEST(GoldenCorpus, MatchesIndependentDecoders) {
    const auto expected = golden::load_expected(std::string(FWATCH_TEST_DATA) + "/golden_expected.jsonl");
    ASSERT_GE(expected.size(), 20u);
    std::ifstream log(std::string(FWATCH_TEST_DATA) + "/golden_corpus.log");
    ASSERT_TRUE(log);
    const auto res = ais::decode_log(log);
    ASSERT_EQ(res.records.size(), expected.size());
    EXPECT_EQ(res.stats.error_total(), 0u);
    EXPECT_EQ(res.stats.pending_fragments, 0u);
    for (std::size_t i = 0; i < expected.size(); ++i)
        EXPECT_EQ(golden::flatten(res.records[i]), expected[i]) << "record " << i;
}

TEST(GoldenCorpus, CoversRequiredMessageKinds) {
    const auto expected = golden::load_expected(std::string(FWATCH_TEST_DATA) + "/golden_expected.jsonl");
    std::set<int> types;
    for (const auto& e : expected) types.insert(e["type"].get<int>());
    for (int t : {1, 3, 18, 5, 24}) EXPECT_TRUE(types.count(t)) << t;
    std::size_t multi = 0;
    for (const auto& l : golden::load_corpus(std::string(FWATCH_TEST_DATA) + "/golden_corpus.log"))
        if (ais::parse_frame(ais::verify_checksum(l.sentence)).fragment_index == 2) ++multi;
    EXPECT_GE(multi, 3u);
}
