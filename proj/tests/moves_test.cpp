#include "threshold/moves.hpp"

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "threshold/extremal.hpp"
#include "threshold/graph.hpp"

using namespace threshold;

namespace {

ThresholdCode C(const char* text) { return parse_code(text); }

constexpr MoveKind kAllKinds[] = {MoveKind::kABSwitch, MoveKind::kBracketed1,
                                  MoveKind::kBracketed0, MoveKind::kIndsetConsecutive,
                                  MoveKind::kIndsetNonconsecutive};

bool weakly_above(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

}  // namespace

TEST(AbSwitch, PreservesMatchingVector) {
  EXPECT_EQ(ab_switch(C("0110*"), 0).str(), "1001*");
  EXPECT_EQ(match_vector(C("0110*")), match_vector(C("1001*")));
  EXPECT_EQ(ab_switch(ab_switch(C("0110*"), 0), 0), C("0110*"));
  EXPECT_EQ(ab_switch(C("011*"), 0).str(), "100*");
}

TEST(AbSwitch, RejectsWrongWindow) {
  EXPECT_THROW(ab_switch(C("011011*"), 2), MoveError);
  EXPECT_THROW(ab_switch(C("0110*"), 2), MoveError);
}

TEST(Bracketed1Move, Examples) {
  const ThresholdCode a = C("011101*");
  const ThresholdCode a2 = bracketed_1_move(a, 0);
  EXPECT_EQ(a2.str(), "101011*");
  EXPECT_EQ(edge_count(a2), edge_count(a));
  EXPECT_GT(match_vector(a2).total(), match_vector(a).total());

  // The star reads as the right 0.
  const ThresholdCode b = C("0111*");
  EXPECT_EQ(bracketed_1_move(b, 0).str(), "1010*");
  EXPECT_GT(match_vector(C("1010*")).total(), match_vector(b).total());

  const ThresholdCode c = C("01110*");
  EXPECT_EQ(bracketed_1_move(c, 0).str(), "10101*");
  EXPECT_GT(match_vector(C("10101*")).total(), match_vector(c).total());

  EXPECT_THROW(bracketed_1_move(C("0110*"), 0), MoveError);
  EXPECT_THROW(bracketed_1_move(C("010101*"), 0), MoveError);
}

TEST(Bracketed0Move, Examples) {
  EXPECT_EQ(bracketed_0_move(C("10001*"), 0).str(), "01010*");
  EXPECT_EQ(bracketed_0_move(C("100001*"), 0).str(), "010010*");
  for (const char* text : {"10001*", "100001*"}) {
    const ThresholdCode c = C(text);
    const ThresholdCode d = bracketed_0_move(c, 0);
    EXPECT_EQ(edge_count(c), edge_count(d));
    EXPECT_GT(match_vector(d).total(), match_vector(c).total()) << text;
  }
  EXPECT_THROW(bracketed_0_move(C("1001*"), 0), MoveError);
}

TEST(IndsetMoves, Examples) {
  EXPECT_EQ(indset_consecutive_move(C("1001*"), 0).str(), "0110*");
  EXPECT_LT(ind_vector(C("0110*")).total(), ind_vector(C("1001*")).total());
  const ThresholdCode j3 = indset_consecutive_move(C("10001*"), 0);
  EXPECT_LT(ind_vector(j3).total(), ind_vector(C("10001*")).total());
  EXPECT_THROW(indset_consecutive_move(C("101*"), 0), MoveError);

  EXPECT_EQ(indset_nonconsecutive_move(C("10101*"), 0).str(), "01110*");
  EXPECT_EQ(indset_nonconsecutive_move(C("101101*"), 0).str(), "011110*");
  EXPECT_LT(ind_vector(C("01110*")).total(), ind_vector(C("10101*")).total());
  EXPECT_LT(ind_vector(C("011110*")).total(), ind_vector(C("101101*")).total());
  // Final 1 supplied by the star.
  EXPECT_EQ(indset_nonconsecutive_move(C("1010*"), 0).str(), "0111*");
  EXPECT_TRUE(move_sites(MoveKind::kIndsetNonconsecutive, C("0101*")).empty());
  EXPECT_THROW(indset_nonconsecutive_move(C("0101*"), 0), MoveError);
}

TEST(Moves, KindNames) {
  EXPECT_EQ(to_string(MoveKind::kABSwitch), "ab-switch");
  EXPECT_EQ(to_string(MoveKind::kBracketed1), "bracketed-1-move");
  EXPECT_EQ(to_string(MoveKind::kBracketed0), "bracketed-0-move");
  EXPECT_EQ(to_string(MoveKind::kIndsetConsecutive), "indset-0-move");
  EXPECT_EQ(to_string(MoveKind::kIndsetNonconsecutive), "indset-nonconsecutive-move");
}

TEST(Moves, CountLawsExhaustive) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      const MatchingVector m = match_vector(c);
      const IndependenceVector i = ind_vector(c);
      for (MoveKind kind : kAllKinds) {
        for (std::size_t at : move_sites(kind, c)) {
          const ThresholdCode d = apply_move(kind, c, at);
          ASSERT_EQ(d.size(), c.size());
          ASSERT_EQ(edge_count(d), edge_count(c));
          switch (kind) {
            case MoveKind::kABSwitch:
              EXPECT_EQ(match_vector(d), m) << text << " @" << at;
              break;
            case MoveKind::kBracketed0:
            case MoveKind::kBracketed1: {
              const MatchingVector md = match_vector(d);
              EXPECT_GT(md.total(), m.total()) << text << " @" << at;
              EXPECT_TRUE(weakly_above(md.counts, m.counts)) << text << " @" << at;
              break;
            }
            case MoveKind::kIndsetConsecutive:
            case MoveKind::kIndsetNonconsecutive: {
              const IndependenceVector id = ind_vector(d);
              EXPECT_LT(id.total(), i.total()) << text << " @" << at;
              EXPECT_TRUE(weakly_above(i.counts, id.counts)) << text << " @" << at;
              break;
            }
          }
        }
      }
    }
  }
}

TEST(Moves, SitesAgreeWithPatternText) {
  // A window matches iff it literally spells the pattern, star as wildcard.
  auto spells = [](const std::string& text, std::size_t at, const std::string& pattern) {
    if (at + pattern.size() > text.size()) return false;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      const char c = text[at + k];
      if (c != pattern[k] && c != '*') return false;
    }
    return true;
  };
  for (int n = 1; n <= 10; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      for (std::size_t at = 0; at < text.size(); ++at) {
        bool ab = spells(text, at, "0110") || spells(text, at, "1001");
        bool b1 = false, b0 = false, i0 = false, inc = false;
        for (std::size_t j = 2; j <= text.size(); ++j) {
          const std::string ones(j, '1'), zeros(j, '0');
          auto inner_ok = [&](std::size_t len) {
            // The star may only close the window.
            return text.find('*', at) >= at + len - 1;
          };
          if (j >= 3 && spells(text, at, "0" + ones + "0") && inner_ok(j + 2)) b1 = true;
          if (j >= 3 && spells(text, at, "1" + zeros + "1") && inner_ok(j + 2)) b0 = true;
          if (spells(text, at, "1" + zeros + "1") && inner_ok(j + 2)) i0 = true;
        }
        for (std::size_t j = 1; j <= text.size(); ++j) {
          const std::string w = "10" + std::string(j, '1') + "01";
          if (spells(text, at, w) && text.find('*', at) >= at + w.size() - 1) inc = true;
        }
        ab = ab && text.find('*', at) >= at + 3;
        EXPECT_EQ(match_window(MoveKind::kABSwitch, c, at).has_value(), ab) << text << at;
        EXPECT_EQ(match_window(MoveKind::kBracketed1, c, at).has_value(), b1) << text << at;
        EXPECT_EQ(match_window(MoveKind::kBracketed0, c, at).has_value(), b0) << text << at;
        EXPECT_EQ(match_window(MoveKind::kIndsetConsecutive, c, at).has_value(), i0)
            << text << at;
        EXPECT_EQ(match_window(MoveKind::kIndsetNonconsecutive, c, at).has_value(), inc)
            << text << at;
      }
    }
  }
}

TEST(MaximizeMatchings, SeparationIssueBaseCase) {
  const RewriteTrace t = maximize_matchings_by_moves(C("011011*"));
  ASSERT_EQ(t.steps.size(), 2u);
  EXPECT_EQ(t.steps[0].kind, MoveKind::kABSwitch);
  EXPECT_EQ(t.steps[0].after.str(), "100111*");
  EXPECT_EQ(t.steps[0].total_after, t.steps[0].total_before);
  EXPECT_EQ(t.steps[1].kind, MoveKind::kBracketed1);
  EXPECT_GT(t.steps[1].total_after, t.steps[1].total_before);
  EXPECT_TRUE(t.steps[1].uses_star);
  EXPECT_TRUE(is_almost_alternating(t.final_code));
}

TEST(MaximizeMatchings, IsolatedLastVertexCode) {
  const ThresholdCode g = C("1000111*");
  const RewriteTrace t = maximize_matchings_by_moves(g);
  EXPECT_FALSE(t.steps.empty());
  EXPECT_TRUE(is_almost_alternating(t.final_code));
  EXPECT_EQ(t.final_code.size(), 8u);
  EXPECT_EQ(edge_count(t.final_code), 13u);
  EXPECT_GT(match_vector(t.final_code).total(), match_vector(g).total());
}

TEST(MaximizeMatchings, FixpointsAreAlmostAlternating) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      const RewriteTrace t = maximize_matchings_by_moves(c);
      EXPECT_TRUE(is_almost_alternating(t.final_code)) << text;
      EXPECT_EQ(t.steps.empty(), is_almost_alternating(c)) << text;
      ThresholdCode prev = c;
      for (const auto& s : t.steps) {
        EXPECT_EQ(s.before, prev);
        EXPECT_EQ(edge_count(s.after), edge_count(c));
        prev = s.after;
      }
      EXPECT_EQ(prev, t.final_code);
    }
  }
}

TEST(MinimizeIndsets, Examples) {
  const RewriteTrace a = minimize_indsets_by_moves(C("10101*"));
  EXPECT_EQ(a.final_code, colex_code(6, edge_count(C("10101*"))));
  EXPECT_TRUE(minimize_indsets_by_moves(C("0011*")).steps.empty());
  const RewriteTrace b = minimize_indsets_by_moves(C("1001*"));
  ASSERT_EQ(b.steps.size(), 1u);
  EXPECT_EQ(b.steps[0].kind, MoveKind::kIndsetConsecutive);
  EXPECT_TRUE(is_colex(b.final_code));
}

TEST(MinimizeIndsets, FixpointsAreColex) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& text : oracle::all_codes(n)) {
      const ThresholdCode c = parse_code(text);
      const RewriteTrace t = minimize_indsets_by_moves(c);
      EXPECT_EQ(t.final_code, colex_code(n, edge_count(c))) << text;
      EXPECT_EQ(t.steps.empty(), is_colex(c)) << text;
      for (const auto& s : t.steps) EXPECT_LT(s.total_after, s.total_before);
    }
  }
}
