#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "threshold/code.hpp"
#include "threshold/counting.hpp"

namespace threshold {

/// Local rewrites of a creation code. Each keeps the vertex and edge
/// counts. Positions address the leftmost symbol of the matched window; the
/// star may stand in for the last symbol of a window.
enum class MoveKind {
  kABSwitch,                 // 0110 <-> 1001
  kBracketed1,               // 0 1^j 0  ->  1 0 1^(j-2) 0 1,  j >= 3
  kBracketed0,               // 1 0^j 1  ->  0 1 0^(j-2) 1 0,  j >= 3
  kIndsetConsecutive,        // 1 0^j 1  ->  0 1 0^(j-2) 1 0,  j >= 2
  kIndsetNonconsecutive,     // 1 0 1^j 0 1  ->  0 1^(j+2) 0,  j >= 1
};

std::string_view to_string(MoveKind kind);

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Length of the window the move would rewrite at `at`, or nullopt if the
/// pattern does not match there.
std::optional<std::size_t> match_window(MoveKind kind, const ThresholdCode& code,
                                        std::size_t at);

/// Applies the move; throws MoveError if the pattern does not match.
ThresholdCode apply_move(MoveKind kind, const ThresholdCode& code, std::size_t at);

ThresholdCode ab_switch(const ThresholdCode& code, std::size_t at);
ThresholdCode bracketed_1_move(const ThresholdCode& code, std::size_t at);
ThresholdCode bracketed_0_move(const ThresholdCode& code, std::size_t at);
ThresholdCode indset_consecutive_move(const ThresholdCode& code, std::size_t at);
ThresholdCode indset_nonconsecutive_move(const ThresholdCode& code, std::size_t at);

/// All positions where `kind` matches, left to right.
std::vector<std::size_t> move_sites(MoveKind kind, const ThresholdCode& code);

enum class Objective { kMatchings, kIndependentSets };

std::string_view to_string(Objective objective);

struct RewriteStep {
  MoveKind kind;
  std::size_t position = 0;
  std::size_t window = 0;
  bool uses_star = false;  // window covers the star
  ThresholdCode before;
  ThresholdCode after;
  // m(G) for the matchings objective, i(G) for independent sets.
  BigInt total_before;
  BigInt total_after;
};

struct RewriteTrace {
  Objective objective;
  ThresholdCode initial;
  ThresholdCode final_code;
  std::vector<RewriteStep> steps;
};

/// Drives `code` to an almost alternating code. Bracketed strings are
/// removed first (m strictly grows); otherwise the shortest separation issue
/// is shortened by ab-switches (m unchanged) until a bracketed string
/// appears. Throws std::logic_error if a step breaks its count law.
RewriteTrace maximize_matchings_by_moves(const ThresholdCode& code);

/// Drives `code` to its colex code. Every step strictly lowers i(G) and the
/// binary value of the code. Throws std::logic_error if a step breaks its
/// count law.
RewriteTrace minimize_indsets_by_moves(const ThresholdCode& code);

}  // namespace threshold
