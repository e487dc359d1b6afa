#include "threshold/graph.hpp"

#include <algorithm>
#include <sstream>

namespace threshold {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adjacency_.at(u).set(v);
  adjacency_.at(v).set(u);
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != Bitset::npos;
         v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    out.adjacency_[v] = ~adjacency_[v];
    out.adjacency_[v].reset(v);
  }
  return out;
}

ThresholdGraph build_graph(const ThresholdCode& code) {
  const std::size_t n = code.size();
  Graph g(n);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (code.at(p) != '1') continue;
    for (std::size_t q = p + 1; q < n; ++q) g.add_edge(p, q);
  }
  return g;
}

std::uint64_t edge_count(const ThresholdCode& code) {
  const std::size_t n = code.size();
  std::uint64_t e = 0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (code.at(p) == '1') e += n - 1 - p;
  }
  return e;
}

Peeling peel_threshold(const Graph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) throw NotThresholdError("graph has no vertices");
  Graph::Bitset alive(n);
  alive.set();
  Peeling result{ThresholdCode::from_digits(""), {}};
  std::string digits;
  result.order.reserve(n);
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    std::size_t chosen = n;
    char digit = '0';
    for (std::size_t v = alive.find_first(); v != Graph::Bitset::npos;
         v = alive.find_next(v)) {
      if ((graph.neighbors(v) & alive).none()) {
        chosen = v;
        break;
      }
    }
    if (chosen == n) {
      for (std::size_t v = alive.find_first(); v != Graph::Bitset::npos;
           v = alive.find_next(v)) {
        if ((graph.neighbors(v) & alive).count() == remaining - 1) {
          chosen = v;
          digit = '1';
          break;
        }
      }
    }
    if (chosen == n) {
      throw NotThresholdError("no isolated or dominating vertex among " +
                              std::to_string(remaining) + " remaining vertices");
    }
    digits.push_back(digit);
    result.order.push_back(chosen);
    alive.reset(chosen);
  }
  result.order.push_back(alive.find_first());
  result.code = ThresholdCode::from_digits(std::move(digits));
  return result;
}

ThresholdCode code_from_graph(const Graph& graph) {
  return peel_threshold(graph).code;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-list") return ExportFormat::kEdgeList;
  if (name == "dot") return ExportFormat::kDot;
  throw std::invalid_argument("unknown export format '" + std::string(name) + "'");
}

std::string export_graph(const Graph& graph, ExportFormat format) {
  const std::size_t n = graph.size();
  auto label = [n](std::size_t p) { return n - p; };
  std::vector<std::pair<std::size_t, std::size_t>> labelled;
  for (auto [u, v] : graph.edges()) {
    labelled.emplace_back(std::max(label(u), label(v)), std::min(label(u), label(v)));
  }
  std::sort(labelled.begin(), labelled.end());

  std::ostringstream out;
  if (format == ExportFormat::kEdgeList) {
    for (auto [i, j] : labelled) out << 'v' << i << " v" << j << '\n';
    return out.str();
  }
  out << "graph T {\n";
  for (std::size_t i = 1; i <= n; ++i) out << "  v" << i << ";\n";
  for (auto [i, j] : labelled) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace threshold
