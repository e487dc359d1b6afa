#include "threshold/extremal.hpp"

#include <algorithm>
#include <string>

namespace threshold {

namespace {

void check_request(std::uint64_t n, std::uint64_t e) {
  if (n == 0) throw std::out_of_range("extremal codes need at least one vertex");
  if (e > max_edges(n)) {
    throw std::out_of_range("e = " + std::to_string(e) + " exceeds C(" +
                            std::to_string(n) + ",2)");
  }
}

// Small form for e <= sm(n): block of 0s, then a^alpha b^beta, starred when
// k^2 <= e <= k(k+1) and unstarred when k(k+1) <= e <= (k+1)^2.
ABForm small_form(std::uint64_t n, std::uint64_t e) {
  for (std::uint64_t k = 0; k * k <= e; ++k) {
    ABForm form;
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    std::uint64_t block = 0;
    if (e <= k * (k + 1) && 2 * k + 1 <= n) {
      beta = e - k * k;
      alpha = k - beta;
      block = n - 2 * k - 1;
      form.starred = true;
    } else if (k * (k + 1) <= e && e <= (k + 1) * (k + 1) && 2 * k + 2 <= n) {
      alpha = (k + 1) * (k + 1) - e;
      beta = k + 1 - alpha;
      block = n - 2 * (k + 1);
      form.starred = false;
    } else {
      continue;
    }
    if (block > 0) form.block_digit = '0';
    form.block_len = block;
    form.word = std::string(alpha, 'a') + std::string(beta, 'b');
    return form;
  }
  throw std::logic_error("no small almost alternating form for n = " +
                         std::to_string(n) + ", e = " + std::to_string(e));
}

ThresholdCode canonical(ABForm form) {
  std::sort(form.word.begin(), form.word.end());
  return form.reconstruct();
}

ThresholdCode via_complement(std::uint64_t n, std::uint64_t e) {
  const ThresholdCode flipped =
      complement_code(small_form(n, max_edges(n) - e).reconstruct());
  const auto forms = ab_forms(flipped);
  if (forms.empty()) {
    throw std::logic_error("complement " + flipped.str() +
                           " is not almost alternating");
  }
  return canonical(forms.front());
}

}  // namespace

std::uint64_t max_edges(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::uint64_t sm(std::uint64_t n) { return n * n / 4; }

std::uint64_t s(std::uint64_t alpha, std::uint64_t beta) {
  return (alpha + beta) * (alpha + beta) - alpha;
}

std::uint64_t s_star(std::uint64_t alpha, std::uint64_t beta) {
  return (alpha + beta) * (alpha + beta) + beta;
}

ThresholdCode almost_alternating_code(std::uint64_t n, std::uint64_t e) {
  check_request(n, e);
  const std::uint64_t total = max_edges(n);
  if (e > sm(n)) return via_complement(n, e);
  ThresholdCode direct = canonical(small_form(n, e));
  if (e + sm(n) >= total) {
    // Both constructions apply; they must agree.
    if (ThresholdCode other = via_complement(n, e); other != direct) {
      throw std::logic_error("small and complemented constructions disagree: " +
                             direct.str() + " vs " + other.str());
    }
  }
  return direct;
}

ThresholdCode almost_alternating_code(const ExtremalRequest& request) {
  return almost_alternating_code(request.n, request.e);
}

ThresholdCode colex_code(std::uint64_t n, std::uint64_t e) {
  check_request(n, e);
  std::uint64_t t = 1;
  while (t < n && max_edges(t + 1) <= e) ++t;
  const std::uint64_t r = e - max_edges(t);
  if (t == n) return ThresholdCode::from_digits(std::string(n - 1, '1'));
  std::string digits = std::string(n - t - 1, '0') + std::string(r, '1') + "0" +
                       std::string(t - r - 1, '1');
  return ThresholdCode::from_digits(std::move(digits));
}

ThresholdCode colex_code(const ExtremalRequest& request) {
  return colex_code(request.n, request.e);
}

}  // namespace threshold
