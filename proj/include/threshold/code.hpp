#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threshold {

/// Thrown when a creation code cannot be parsed. `position()` is the
/// zero-based offset of the offending character in the input text.
class CodeParseError : public std::invalid_argument {
 public:
  CodeParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A threshold graph creation code.
///
/// The leftmost symbol is the last vertex added and the rightmost is the
/// first. A `1` adds a dominating vertex, a `0` an isolated one. The first
/// vertex's digit does not affect the graph, so it is always stored as the
/// terminal `*`. Position `p` (0-based, from the left) is vertex `p`; the
/// star sits at position `n - 1`.
class ThresholdCode {
 public:
  static constexpr char kStar = '*';

  /// `digits` must have length n-1 and contain only '0' and '1'.
  static ThresholdCode from_digits(std::string digits);

  /// Vertex count n (always >= 1).
  std::size_t size() const noexcept { return digits_.size() + 1; }

  /// The n-1 stored digits, without the star.
  std::string_view digits() const noexcept { return digits_; }

  /// Symbol at position p in [0, n): '0', '1', or '*' for p == n-1.
  char at(std::size_t p) const {
    return p == digits_.size() ? kStar : digits_.at(p);
  }
  bool is_star(std::size_t p) const noexcept { return p == digits_.size(); }

  /// Text form: digits followed by `*`.
  std::string str() const { return digits_ + kStar; }

  friend bool operator==(const ThresholdCode&, const ThresholdCode&) = default;
  friend auto operator<=>(const ThresholdCode& a, const ThresholdCode& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.digits_ <=> b.digits_;
  }

 private:
  explicit ThresholdCode(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

/// Parses text over {0,1,*}. A final `0` or `1` is normalized to `*`.
ThresholdCode parse_code(std::string_view text);

/// Parses block + word notation such as "000aaba*" or "111aba", where
/// `a` = 01 and `b` = 10, and normalizes the result like parse_code.
ThresholdCode parse_ab_notation(std::string_view text);

std::string render(const ThresholdCode& code);

/// Symbol-wise 0 <-> 1 flip; the star stays. Its graph is the complement.
ThresholdCode complement_code(const ThresholdCode& code);

/// A decomposition of a code as a block of equal digits followed by a word
/// over {a, b}. When `starred` is set the star is a separate trailing
/// vertex; otherwise it supplies the last digit of the final letter.
struct ABForm {
  std::optional<char> block_digit;  // '0' or '1'; empty when block_len == 0
  std::size_t block_len = 0;
  std::string word;  // letters 'a' (01) and 'b' (10)
  bool starred = false;

  std::size_t alpha() const;
  std::size_t beta() const;
  bool small() const { return !block_digit || *block_digit == '0'; }
  bool large() const { return block_digit && *block_digit == '1'; }

  /// The code this form spells out.
  ThresholdCode reconstruct() const;

  friend bool operator==(const ABForm&, const ABForm&) = default;
};

/// Every block + word decomposition of `code`, ordered by block length.
/// Empty iff the code is not almost alternating; two entries iff it is
/// alternating (n >= 2).
std::vector<ABForm> ab_forms(const ThresholdCode& code);

bool is_almost_alternating(const ThresholdCode& code);

/// A block of equal digits followed by a strictly alternating string.
bool is_alternating(const ThresholdCode& code);

/// True if some decomposition has a 0-block or an empty block. Throws
/// std::invalid_argument if the code is not almost alternating.
bool is_small(const ThresholdCode& code);
/// True if some decomposition has a 1-block. Same precondition.
bool is_large(const ThresholdCode& code);

/// At most one 0 digit after the first 1 (the star is not counted). These
/// are exactly the codes of colex graphs.
bool is_colex(const ThresholdCode& code);

struct Span {
  std::size_t begin = 0;
  std::size_t length = 0;
  std::size_t end() const { return begin + length; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class DefectKind { kBracketed0String, kBracketed1String, kSeparationIssue };

std::string_view to_string(DefectKind kind);

struct StructuralDefect {
  DefectKind kind;
  /// Whole pattern. For a bracketed string this runs from the left bracket
  /// to the right bracket inclusive (the right bracket may be the star).
  Span extent;
  // Separation issues only.
  Span first_pair;
  Span middle;
  Span second_pair;
};

/// Leftmost bracketed string: opposite digit, at least three equal digits,
/// opposite digit or the star.
std::optional<StructuralDefect> find_bracketed_string(const ThresholdCode& code);

/// True if digit pairs starting at `first` and `second` form a separation
/// issue: first pair preceded by the opposite digit, an odd-length gap, and
/// at least one symbol (possibly the star) after the second pair.
bool is_separation_issue(const ThresholdCode& code, std::size_t first,
                         std::size_t second);

/// The separation issue with the shortest middle; leftmost among ties.
std::optional<StructuralDefect> find_separation_issue(const ThresholdCode& code);

}  // namespace threshold
