#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "threshold/code.hpp"

namespace threshold {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  using Bitset = boost::dynamic_bitset<>;

  explicit Graph(std::size_t n) : adjacency_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return adjacency_.size(); }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return adjacency_.at(u).test(v);
  }
  const Bitset& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).count(); }
  std::uint64_t edge_count() const;

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adjacency_;
};

/// A graph realized from a code: vertex p is code position p, and p < q
/// are adjacent iff position p holds a 1.
using ThresholdGraph = Graph;

ThresholdGraph build_graph(const ThresholdCode& code);

/// Edge count without building the graph: each 1 at position p contributes
/// n - 1 - p edges.
std::uint64_t edge_count(const ThresholdCode& code);

class NotThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of peeling a threshold graph. `order[p]` is the vertex of the
/// input graph that plays code position p.
struct Peeling {
  ThresholdCode code;
  std::vector<std::size_t> order;
};

/// Repeatedly removes an isolated or dominating vertex (isolated first, then
/// lowest index). Throws NotThresholdError if neither exists at some step,
/// or if the graph is empty.
Peeling peel_threshold(const Graph& graph);

ThresholdCode code_from_graph(const Graph& graph);

enum class ExportFormat { kEdgeList, kDot };

/// Accepts "edge-list" and "dot"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Vertex p is labelled v(n-p), so the star is v1 and the leftmost symbol
/// is vn. Edge lists hold one "vi vj" line per edge with i > j, sorted by
/// (i, j).
std::string export_graph(const Graph& graph, ExportFormat format);

}  // namespace threshold
