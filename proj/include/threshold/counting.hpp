#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "threshold/code.hpp"
#include "threshold/graph.hpp"

namespace threshold {

using BigInt = boost::multiprecision::cpp_int;

/// m_0..m_{floor(n/2)}: number of matchings with k edges.
struct MatchingVector {
  std::vector<BigInt> counts;
  BigInt total() const;
  friend bool operator==(const MatchingVector&, const MatchingVector&) = default;
};

/// i_0..i_n: number of independent sets with k vertices.
struct IndependenceVector {
  std::vector<BigInt> counts;
  BigInt total() const;
  friend bool operator==(const IndependenceVector&,
                         const IndependenceVector&) = default;
};

namespace detail {

// Right-to-left DP over the code. A dominating vertex joining t vertices
// extends every (k-1)-matching by one of its t - 2(k-1) free vertices.
// `Int` must be wide enough for the counts; see kMaxU64Vertices.
template <class Int>
std::vector<Int> matching_counts(const ThresholdCode& code) {
  const std::size_t n = code.size();
  std::vector<Int> m(n / 2 + 1, Int(0));
  m[0] = 1;
  for (std::size_t t = 1; t < n; ++t) {
    if (code.at(n - 1 - t) != '1') continue;
    for (std::size_t k = std::min(t / 2 + 1, n / 2); k >= 1; --k) {
      m[k] += Int(t - 2 * (k - 1)) * m[k - 1];
    }
  }
  return m;
}

// An isolated vertex extends every (k-1)-set; a dominating one only adds
// itself as a singleton.
template <class Int>
std::vector<Int> independence_counts(const ThresholdCode& code) {
  const std::size_t n = code.size();
  std::vector<Int> ind(n + 1, Int(0));
  ind[0] = 1;
  ind[1] = 1;  // the star
  for (std::size_t t = 1; t < n; ++t) {
    if (code.at(n - 1 - t) == '1') {
      ind[1] += 1;
    } else {
      for (std::size_t k = t + 1; k >= 1; --k) ind[k] += ind[k - 1];
    }
  }
  return ind;
}

/// Every matching and independent-set count of an n-vertex graph fits in
/// 64 bits for n <= 30 (m <= telephone number T(30) < 2^60, i <= 2^30).
constexpr std::size_t kMaxU64Vertices = 30;

}  // namespace detail

MatchingVector match_vector(const ThresholdCode& code);
IndependenceVector ind_vector(const ThresholdCode& code);

class OracleLimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleLimits {
  std::size_t max_matching_vertices = 12;
  std::size_t max_independent_set_vertices = 24;
};

/// Backtracking over matchings of an arbitrary graph.
MatchingVector brute_force_match_vector(const Graph& graph,
                                        const OracleLimits& limits = {});
/// Enumerates all 2^n vertex subsets of an arbitrary graph.
IndependenceVector brute_force_ind_vector(const Graph& graph,
                                          const OracleLimits& limits = {});

}  // namespace threshold
