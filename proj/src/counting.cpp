#include "threshold/counting.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace threshold {

namespace {

BigInt sum(const std::vector<BigInt>& v) {
  return std::accumulate(v.begin(), v.end(), BigInt(0));
}

void count_matchings(const Graph& g, std::vector<bool>& used, std::size_t from,
                     std::size_t size, std::vector<std::uint64_t>& counts) {
  std::size_t v = from;
  while (v < g.size() && used[v]) ++v;
  if (v == g.size()) {
    ++counts[size];
    return;
  }
  used[v] = true;
  count_matchings(g, used, v + 1, size, counts);  // v stays unmatched
  const auto& nbrs = g.neighbors(v);
  for (auto u = nbrs.find_next(v); u != Graph::Bitset::npos; u = nbrs.find_next(u)) {
    if (used[u]) continue;
    used[u] = true;
    count_matchings(g, used, v + 1, size + 1, counts);
    used[u] = false;
  }
  used[v] = false;
}

}  // namespace

BigInt MatchingVector::total() const { return sum(counts); }
BigInt IndependenceVector::total() const { return sum(counts); }

MatchingVector match_vector(const ThresholdCode& code) {
  return {detail::matching_counts<BigInt>(code)};
}

IndependenceVector ind_vector(const ThresholdCode& code) {
  return {detail::independence_counts<BigInt>(code)};
}

MatchingVector brute_force_match_vector(const Graph& graph,
                                        const OracleLimits& limits) {
  if (graph.size() > limits.max_matching_vertices) {
    throw OracleLimitExceeded("matching oracle limited to " +
                              std::to_string(limits.max_matching_vertices) +
                              " vertices");
  }
  std::vector<std::uint64_t> counts(graph.size() / 2 + 1, 0);
  std::vector<bool> used(graph.size(), false);
  count_matchings(graph, used, 0, 0, counts);
  return {std::vector<BigInt>(counts.begin(), counts.end())};
}

IndependenceVector brute_force_ind_vector(const Graph& graph,
                                          const OracleLimits& limits) {
  const std::size_t n = graph.size();
  if (n > limits.max_independent_set_vertices || n >= 64) {
    throw OracleLimitExceeded("independent-set oracle limited to " +
                              std::to_string(limits.max_independent_set_vertices) +
                              " vertices");
  }
  std::vector<std::uint64_t> masks(n, 0);
  for (auto [u, v] : graph.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  // independent[s] for every subset s, built from s minus its lowest vertex.
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint8_t> independent(subsets, 0);
  std::vector<std::uint64_t> counts(n + 1, 0);
  independent[0] = 1;
  counts[0] = 1;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    if (independent[rest] && (masks[low] & rest) == 0) {
      independent[s] = 1;
      ++counts[std::popcount(s)];
    }
  }
  return {std::vector<BigInt>(counts.begin(), counts.end())};
}

}  // namespace threshold
