#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dejean/search.hpp"
#include "oracles.hpp"

using namespace dejean;

namespace {

// Unpruned filter: decode every binary word and test it directly.
bool oracle_legal(unsigned mask, int len, int n) {
  std::vector<int> b;
  for (int i = 0; i < len; ++i) b.push_back((mask >> i) & 1);
  oracle::Symbols prefix;
  for (int a = 1; a < n; ++a) prefix.push_back(a);
  const auto v = oracle::decode(b, prefix, n);
  return oracle::repetitions_exceeding(v, n, n - 1).empty();
}

}  // namespace

TEST(EnumerateLegal, MatchesUnprunedFilterForN15) {
  for (int len = 1; len <= 14; ++len) {
    std::vector<BinaryWord> got;
    enumerate_legal(15, static_cast<std::size_t>(len), [&](const BinaryWord& b) { got.push_back(b); });
    std::vector<BinaryWord> want;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      if (!oracle_legal(mask, len, 15)) continue;
      BinaryWord b;
      for (int i = 0; i < len; ++i) b.push_back(static_cast<std::uint8_t>((mask >> i) & 1));
      want.push_back(b);
    }
    std::ranges::sort(want);
    EXPECT_EQ(got, want) << "length " << len;  // visits are lexicographic
  }
}

TEST(EnumerateLegal, SmallCounts) {
  // "0" repeats the first letter n-1 places later: exponent n/(n-1) exactly.
  EXPECT_EQ(count_legal(15, 1), 2u);
  // "00" gives v_1 v_2 ... v_{n-1} v_1 v_2, exponent (n+1)/(n-1).
  for (int n : {5, 15, 26}) {
    std::vector<BinaryWord> two;
    enumerate_legal(n, 2, [&](const BinaryWord& b) { two.push_back(b); });
    EXPECT_EQ(two.size(), 3u);
    EXPECT_EQ(std::ranges::count(two, BinaryWord::parse("00")), 0);
  }
}

TEST(EnumerateLegal, StartPrefixAndEarlyStop) {
  std::uint64_t all = count_legal(15, 12);
  std::uint64_t split = 0;
  enumerate_legal(15, 1, [&](const BinaryWord& p) { split += enumerate_legal(15, 12, [](const BinaryWord&) {}, p); });
  EXPECT_EQ(split, all);
  int seen = 0;
  enumerate_legal(15, 12, [&](const BinaryWord&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}

TEST(EnumerateLegal, SigmaMatchesSigmaWord) {
  int checked = 0;
  enumerate_legal(7, 16, [&](const BinaryWord& b, const Permutation& s) {
    if (checked++ % 7 == 0) {
      EXPECT_EQ(s, sigma_word(b, 7));
    }
  });
  EXPECT_GT(checked, 0);
}

TEST(EnumerateLegal, LeavesAreLegal) {
  std::mt19937_64 rng(9);
  std::vector<BinaryWord> leaves;
  enumerate_legal(15, 30, [&](const BinaryWord& b) {
    if (rng() % 50 == 0) leaves.push_back(b);
  });
  ASSERT_FALSE(leaves.empty());
  for (const auto& b : leaves) {
    const auto v = decode(b, canonical_prefix(15));
    EXPECT_TRUE(find_repetitions_exceeding(v, 15, 14).empty()) << b.str();
  }
}

TEST(Classify, Examples) {
  const auto& h = builtin(15);
  EXPECT_EQ(classify_candidate(h.image1(), 15), CandidateKind::h1);
  EXPECT_EQ(classify_candidate(h.image0(), 15), CandidateKind::h0);
  BinaryWord ones;
  for (int i = 0; i < 15; ++i) ones.push_back(1);
  EXPECT_EQ(classify_candidate(ones, 15), CandidateKind::neither);
  EXPECT_STREQ(to_string(CandidateKind::h0), "h0-candidate");
}

TEST(ConvenientSearch, InjectedKnownGoodPairIsFound) {
  for (const auto& h : {builtin(17), mirror(builtin(15)), builtin(20)}) {
    ConvenientSearch s(h.n(), 1);
    EXPECT_FALSE(s.offer(h.image0()));
    EXPECT_TRUE(s.offer(h.image1()));
    ASSERT_EQ(s.found().size(), 1u);
    EXPECT_EQ(s.found()[0], h);
  }
}

TEST(ConvenientSearch, VerbatimN15PairIsRejected) {
  const auto& h = builtin(15);
  ConvenientSearch s(15, 1);
  s.offer(h.image1());
  EXPECT_FALSE(s.offer(h.image0()));
  EXPECT_EQ(s.pairs_tested(), 1u);
  EXPECT_TRUE(s.found().empty());
}

TEST(ConvenientSearch, IgnoresNonCandidatesAndDuplicates) {
  ConvenientSearch s(15, 1);
  s.offer(BinaryWord::parse("111111111111111"));
  EXPECT_EQ(s.h0_pool() + s.h1_pool(), 0u);
  s.offer(builtin(15).image0());
  s.offer(builtin(15).image0());
  EXPECT_EQ(s.h0_pool(), 1u);
}

TEST(SearchConvenient, TooShortFindsNothing) {
  EXPECT_TRUE(search_convenient(15, 3, 1).empty());
  SearchOptions opts;
  opts.workers = 4;
  EXPECT_TRUE(search_convenient(15, 3, 1, opts).empty());
}

TEST(SearchConvenient, DefaultLengths) {
  EXPECT_EQ(default_search_length(15), 56u);
  EXPECT_EQ(default_search_length(21), 84u);
  EXPECT_EQ(default_search_length(26), 100u);
}

// Small alphabets have convenient morphisms of modest length; whatever is
// found must pass verify() independently.
TEST(SearchConvenient, ResultsVerify) {
  SearchOptions opts;
  opts.workers = 2;
  const auto found = search_convenient(15, 20, 2, opts);
  for (const auto& h : found) EXPECT_TRUE(verify(h).overall());
}
