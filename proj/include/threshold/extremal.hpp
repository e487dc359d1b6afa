#pragma once

#include <cstdint>
#include <stdexcept>

#include "threshold/code.hpp"

namespace threshold {

/// Vertex and edge count of a requested extremal graph. Codes need n >= 1.
struct ExtremalRequest {
  std::uint64_t n = 0;
  std::uint64_t e = 0;
};

/// n(n-1)/2.
std::uint64_t max_edges(std::uint64_t n);

/// Most edges in a small almost alternating graph on n vertices: floor(n^2/4).
std::uint64_t sm(std::uint64_t n);

/// Edges of a small unstarred graph with alpha a's and beta b's.
std::uint64_t s(std::uint64_t alpha, std::uint64_t beta);
/// Edges of a small starred graph with alpha a's and beta b's.
std::uint64_t s_star(std::uint64_t alpha, std::uint64_t beta);

/// The almost alternating code on n vertices with e edges, written with all
/// a's before all b's after the block. Throws std::out_of_range when
/// e > n(n-1)/2 or n == 0.
ThresholdCode almost_alternating_code(std::uint64_t n, std::uint64_t e);
ThresholdCode almost_alternating_code(const ExtremalRequest& request);

/// The code of the graph on [n] whose edges are the first e pairs in colex
/// order: 0^(n-t-1) 1^r 0 1^(t-r-1) *  where e = C(t,2) + r, 0 <= r < t.
ThresholdCode colex_code(std::uint64_t n, std::uint64_t e);
ThresholdCode colex_code(const ExtremalRequest& request);

}  // namespace threshold
