#include "threshold/counting.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "threshold/code.hpp"
#include "threshold/graph.hpp"

using namespace threshold;

namespace {

ThresholdCode C(const char* text) { return parse_code(text); }

std::vector<BigInt> big(std::initializer_list<int> values) {
  std::vector<BigInt> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

std::vector<BigInt> big(const std::vector<std::uint64_t>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST(MatchVector, FigureExample) {
  const MatchingVector m = match_vector(C("001001*"));
  // Length floor(7/2) + 1; no 3-matching exists.
  EXPECT_EQ(m.counts, big({1, 5, 2, 0}));
  EXPECT_EQ(m.total(), 8);
}

TEST(MatchVector, EmptyGraph) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const MatchingVector m = match_vector(ThresholdCode::from_digits(std::string(n - 1, '0')));
    EXPECT_EQ(m.counts.size(), n / 2 + 1);
    EXPECT_EQ(m.counts[0], 1);
    EXPECT_EQ(m.total(), 1);
  }
}

TEST(MatchVector, NoPerfectMatchingWithIsolatedLastVertex) {
  const MatchingVector m = match_vector(C("1000111*"));
  ASSERT_EQ(m.counts.size(), 5u);
  EXPECT_EQ(m.counts[4], 0);
  EXPECT_EQ(m.counts[1], 13);
  EXPECT_EQ(m.counts, big(oracle::matchings("1000111*")));
}

TEST(IndVector, Examples) {
  const IndependenceVector i = ind_vector(C("001001*"));
  EXPECT_EQ(i.counts, big({1, 7, 16, 17, 9, 2, 0, 0}));
  EXPECT_EQ(i.total(), 52);
  EXPECT_EQ(ind_vector(C("111*")).counts, big({1, 4, 0, 0, 0}));
  EXPECT_EQ(ind_vector(C("*")).counts, big({1, 1}));
}

TEST(IndVector, EmptyGraphIsBinomial) {
  const IndependenceVector i = ind_vector(ThresholdCode::from_digits(std::string(39, '0')));
  BigInt binom = 1;
  for (int k = 0; k <= 40; ++k) {
    EXPECT_EQ(i.counts[k], binom);
    binom = binom * (40 - k) / (k + 1);
  }
  EXPECT_EQ(i.total(), BigInt(1) << 40);
}

TEST(Counting, ExactBeyondSixtyFourBits) {
  // i of the empty graph on 70 vertices is 2^70; m of K_70 exceeds 2^64.
  EXPECT_EQ(ind_vector(ThresholdCode::from_digits(std::string(69, '0'))).total(),
            BigInt(1) << 70);
  const MatchingVector k70 = match_vector(ThresholdCode::from_digits(std::string(69, '1')));
  EXPECT_GT(k70.total(), BigInt(1) << 64);
  // Telephone numbers: T(n) = T(n-1) + (n-1) T(n-2).
  BigInt a = 1, b = 1;
  for (int n = 2; n <= 70; ++n) {
    BigInt c = b + BigInt(n - 1) * a;
    a = b;
    b = c;
  }
  EXPECT_EQ(k70.total(), b);
}

TEST(BruteForce, SmallGraphs) {
  EXPECT_EQ(brute_force_match_vector(build_graph(C("111*"))).counts, big({1, 6, 3}));
  EXPECT_EQ(brute_force_match_vector(build_graph(C("1*"))).counts, big({1, 1}));
  EXPECT_EQ(brute_force_match_vector(build_graph(C("001001*"))), match_vector(C("001001*")));
  EXPECT_EQ(brute_force_ind_vector(build_graph(C("001001*"))), ind_vector(C("001001*")));
}

TEST(BruteForce, NonThresholdGraph) {
  Graph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  EXPECT_EQ(brute_force_match_vector(c5).counts, big({1, 5, 5}));
  EXPECT_EQ(brute_force_ind_vector(c5).counts, big({1, 5, 5, 0, 0, 0}));
}

TEST(BruteForce, LimitsAreEnforced) {
  const Graph g = build_graph(ThresholdCode::from_digits(std::string(12, '1')));
  EXPECT_THROW(brute_force_match_vector(g), OracleLimitExceeded);
  EXPECT_NO_THROW(brute_force_match_vector(g, {13, 24}));
  EXPECT_THROW(brute_force_ind_vector(g, {12, 10}), OracleLimitExceeded);
}

TEST(Counting, DynamicProgramEqualsOraclesExhaustive) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      const Graph g = build_graph(c);
      const MatchingVector m = match_vector(c);
      const IndependenceVector i = ind_vector(c);
      EXPECT_EQ(m, brute_force_match_vector(g)) << text;
      EXPECT_EQ(i, brute_force_ind_vector(g)) << text;
      EXPECT_EQ(m.counts, big(oracle::matchings(text))) << text;
      EXPECT_EQ(i.counts, big(oracle::independent_sets(text))) << text;
    }
  }
}

TEST(Counting, FirstEntriesExhaustive) {
  for (int n = 1; n <= 14; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      const MatchingVector m = match_vector(c);
      const IndependenceVector i = ind_vector(c);
      EXPECT_EQ(m.counts.size(), static_cast<std::size_t>(n / 2 + 1));
      EXPECT_EQ(i.counts.size(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(m.counts[0], 1);
      EXPECT_EQ(i.counts[0], 1);
      if (n >= 2) EXPECT_EQ(m.counts[1], edge_count(c)) << text;
      EXPECT_EQ(i.counts[1], n);
    }
  }
}

TEST(Counting, IndependentSetsAreCliquesOfTheComplement) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const Graph h = build_graph(complement_code(parse_code(text)));
      std::vector<std::uint64_t> cliques(n + 1, 0);
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
          for (int v = u + 1; v < n && clique; ++v) {
            if ((s >> u & 1) && (s >> v & 1) && !h.has_edge(u, v)) clique = false;
          }
        }
        if (clique) ++cliques[__builtin_popcount(s)];
      }
      EXPECT_EQ(ind_vector(parse_code(text)).counts, big(cliques)) << text;
    }
  }
}

TEST(Counting, FixedWidthPathAgrees) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      EXPECT_EQ(big(detail::matching_counts<std::uint64_t>(c)), match_vector(c).counts);
      EXPECT_EQ(big(detail::independence_counts<std::uint64_t>(c)), ind_vector(c).counts);
    }
  }
  // K_30 is the largest all-matching count the 64-bit path promises.
  const ThresholdCode k30 = ThresholdCode::from_digits(std::string(29, '1'));
  EXPECT_EQ(big(detail::matching_counts<std::uint64_t>(k30)), match_vector(k30).counts);
}
