#include "threshold/code.hpp"

#include <algorithm>

namespace threshold {

namespace {

bool is_digit(char c) { return c == '0' || c == '1'; }
char flip(char c) { return c == '0' ? '1' : '0'; }

// Reads the even-length span [begin, end) of `code` as letters. The star may
// close the final letter. Returns nullopt if some pair is not a letter.
std::optional<std::string> read_letters(const ThresholdCode& code,
                                        std::size_t begin, std::size_t end) {
  std::string word;
  word.reserve((end - begin) / 2);
  for (std::size_t p = begin; p < end; p += 2) {
    const char first = code.at(p);
    const char second = code.at(p + 1);
    if (second != ThresholdCode::kStar && second == first) return std::nullopt;
    word.push_back(first == '0' ? 'a' : 'b');
  }
  return word;
}

}  // namespace

ThresholdCode ThresholdCode::from_digits(std::string digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!is_digit(digits[i])) {
      throw CodeParseError("code digits must be 0 or 1", i);
    }
  }
  return ThresholdCode(std::move(digits));
}

ThresholdCode parse_code(std::string_view text) {
  if (text.empty()) throw CodeParseError("empty code", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ThresholdCode::kStar) {
      if (i + 1 != text.size()) {
        throw CodeParseError("'*' may only appear as the last symbol", i);
      }
    } else if (!is_digit(c)) {
      throw CodeParseError(std::string("illegal character '") + c + "'", i);
    }
  }
  return ThresholdCode::from_digits(std::string(text.substr(0, text.size() - 1)));
}

ThresholdCode parse_ab_notation(std::string_view text) {
  if (text.empty()) throw CodeParseError("empty code", 0);
  std::string expanded;
  std::size_t i = 0;
  while (i < text.size() && is_digit(text[i])) {
    if (text[i] != text[0]) {
      throw CodeParseError("block must consist of a single repeated digit", i);
    }
    expanded.push_back(text[i++]);
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'a') {
      expanded += "01";
    } else if (c == 'b') {
      expanded += "10";
    } else if (c == ThresholdCode::kStar && i + 1 == text.size()) {
      expanded.push_back(c);
    } else {
      throw CodeParseError(std::string("unexpected '") + c + "' in ab notation", i);
    }
  }
  return parse_code(expanded);
}

std::string render(const ThresholdCode& code) { return code.str(); }

ThresholdCode complement_code(const ThresholdCode& code) {
  std::string digits(code.digits());
  std::transform(digits.begin(), digits.end(), digits.begin(), flip);
  return ThresholdCode::from_digits(std::move(digits));
}

std::size_t ABForm::alpha() const {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), 'a'));
}

std::size_t ABForm::beta() const {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), 'b'));
}

ThresholdCode ABForm::reconstruct() const {
  std::string text(block_len, block_digit.value_or('0'));
  for (char letter : word) text += letter == 'a' ? "01" : "10";
  if (starred) {
    text.push_back(ThresholdCode::kStar);
  } else if (text.empty()) {
    throw std::invalid_argument("unstarred form needs at least one letter");
  }
  return parse_code(text);
}

std::vector<ABForm> ab_forms(const ThresholdCode& code) {
  const std::size_t n = code.size();
  const std::string_view digits = code.digits();
  std::vector<ABForm> forms;
  for (std::size_t block = 0; block < n; ++block) {
    if (block > 0 && digits[block - 1] != digits[0]) break;
    const std::size_t rest = n - block;
    const bool starred = rest % 2 == 1;
    const std::size_t word_end = starred ? n - 1 : n;
    auto word = read_letters(code, block, word_end);
    if (!word) continue;
    ABForm form;
    if (block > 0) form.block_digit = digits[0];
    form.block_len = block;
    form.word = std::move(*word);
    form.starred = starred;
    forms.push_back(std::move(form));
  }
  return forms;
}

bool is_almost_alternating(const ThresholdCode& code) {
  return !ab_forms(code).empty();
}

bool is_alternating(const ThresholdCode& code) {
  const std::string_view d = code.digits();
  std::size_t run = 0;
  while (run < d.size() && d[run] == d[0]) ++run;
  for (std::size_t i = run; i + 1 < d.size(); ++i) {
    if (d[i] == d[i + 1]) return false;
  }
  return true;
}

bool is_small(const ThresholdCode& code) {
  const auto forms = ab_forms(code);
  if (forms.empty()) {
    throw std::invalid_argument("is_small: " + code.str() +
                                " is not almost alternating");
  }
  return std::any_of(forms.begin(), forms.end(),
                     [](const ABForm& f) { return f.small(); });
}

bool is_large(const ThresholdCode& code) {
  const auto forms = ab_forms(code);
  if (forms.empty()) {
    throw std::invalid_argument("is_large: " + code.str() +
                                " is not almost alternating");
  }
  return std::any_of(forms.begin(), forms.end(),
                     [](const ABForm& f) { return f.large(); });
}

bool is_colex(const ThresholdCode& code) {
  const std::string_view d = code.digits();
  const auto first_one = d.find('1');
  if (first_one == std::string_view::npos) return true;
  return std::count(d.begin() + static_cast<std::ptrdiff_t>(first_one), d.end(), '0') <= 1;
}

std::string_view to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::kBracketed0String:
      return "bracketed-0-string";
    case DefectKind::kBracketed1String:
      return "bracketed-1-string";
    case DefectKind::kSeparationIssue:
      return "separation-issue";
  }
  return "unknown";
}

std::optional<StructuralDefect> find_bracketed_string(const ThresholdCode& code) {
  const std::string_view d = code.digits();
  // Runs are maximal, so the symbol after one is the opposite digit or the
  // star; only the left bracket and the length need checking.
  std::size_t start = 0;
  while (start < d.size()) {
    std::size_t end = start;
    while (end < d.size() && d[end] == d[start]) ++end;
    if (start > 0 && end - start >= 3) {
      StructuralDefect defect;
      defect.kind = d[start] == '0' ? DefectKind::kBracketed0String
                                    : DefectKind::kBracketed1String;
      defect.extent = Span{start - 1, end - start + 2};
      return defect;
    }
    start = end;
  }
  return std::nullopt;
}

bool is_separation_issue(const ThresholdCode& code, std::size_t first,
                         std::size_t second) {
  const std::string_view d = code.digits();
  if (first == 0 || second + 1 >= d.size()) return false;  // need a symbol after
  if (second < first + 3 || (second - first - 2) % 2 == 0) return false;
  return d[first] == d[first + 1] && d[first - 1] != d[first] &&
         d[second] == d[second + 1];
}

std::optional<StructuralDefect> find_separation_issue(const ThresholdCode& code) {
  const std::size_t m = code.digits().size();
  std::optional<StructuralDefect> best;
  for (std::size_t gap = 1; gap + 5 <= m && !best; gap += 2) {
    for (std::size_t first = 1; first + gap + 4 <= m; ++first) {
      const std::size_t second = first + 2 + gap;
      if (!is_separation_issue(code, first, second)) continue;
      StructuralDefect defect;
      defect.kind = DefectKind::kSeparationIssue;
      defect.first_pair = Span{first, 2};
      defect.middle = Span{first + 2, gap};
      defect.second_pair = Span{second, 2};
      defect.extent = Span{first, gap + 4};
      best = defect;
      break;
    }
  }
  return best;
}

}  // namespace threshold
