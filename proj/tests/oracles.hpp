#pragma once

// Reference computations for the tests. They work from first principles on
// strings and edge sets and do not call the library code under test.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

// Edge set of a code given as text over {0,1,*}; vertex p is position p.
inline Edges edges_of(const std::string& text) {
  Edges out;
  const int n = static_cast<int>(text.size());
  for (int p = 0; p < n; ++p) {
    if (text[p] != '1') continue;
    for (int q = p + 1; q < n; ++q) out.emplace_back(p, q);
  }
  return out;
}

inline std::vector<int> sorted_degrees(int n, const Edges& edges) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

// First e pairs {i<j} of [n] in colex order: by j, then by i.
inline Edges colex_edges(int n, std::uint64_t e) {
  Edges out;
  for (int j = 1; j < n && out.size() < e; ++j) {
    for (int i = 0; i < j && out.size() < e; ++i) out.emplace_back(i, j);
  }
  return out;
}

// All codes on n vertices as strings, lexicographic in their digits.
inline std::vector<std::string> all_codes(int n) {
  std::vector<std::string> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::string s(n - 1, '0');
    for (int b = 0; b < n - 1; ++b) {
      if (v >> (n - 2 - b) & 1) s[b] = '1';
    }
    out.push_back(s + "*");
  }
  return out;
}

// Direct expansion of block + word. Starred: the star is appended.
// Unstarred: the last digit of the final letter becomes the star.
inline std::string expand(char digit, int block, const std::string& word, bool starred) {
  std::string s(block, digit);
  for (char c : word) s += (c == 'a') ? "01" : "10";
  if (starred) return s + "*";
  s.back() = '*';
  return s;
}

inline std::vector<std::string> words(int len) {
  std::vector<std::string> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string w;
    for (int i = 0; i < len; ++i) w += (mask >> i & 1) ? 'b' : 'a';
    out.push_back(w);
  }
  return out;
}

struct Form {
  char digit;  // '0' or '1'; block may be empty
  int block;
  std::string word;
  bool starred;
};

// Every block + word spelling of an n-vertex code.
inline std::vector<std::pair<Form, std::string>> all_forms(int n) {
  std::vector<std::pair<Form, std::string>> out;
  for (int starred = 0; starred <= 1; ++starred) {
    for (int block = 0; block <= n; ++block) {
      const int rest = n - block - (starred ? 1 : 0);
      if (rest < 0 || rest % 2) continue;
      if (!starred && rest == 0) continue;
      for (const auto& w : words(rest / 2)) {
        for (char d : {'0', '1'}) {
          if (block == 0 && d == '1') continue;
          out.push_back({{d, block, w, starred == 1}, expand(d, block, w, starred == 1)});
        }
      }
    }
  }
  return out;
}

inline std::set<std::string> aa_codes(int n) {
  std::set<std::string> out;
  for (const auto& [form, code] : all_forms(n)) out.insert(code);
  return out;
}

// Matchings of an edge list by plain recursion over edges (include or skip).
inline void count_matchings(const Edges& edges, std::size_t from, std::uint32_t used, int size,
                            std::vector<std::uint64_t>& out) {
  ++out[size];
  for (std::size_t i = from; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    const std::uint32_t mask = (1u << u) | (1u << v);
    if (used & mask) continue;
    count_matchings(edges, i + 1, used | mask, size + 1, out);
  }
}

inline std::vector<std::uint64_t> matchings(const std::string& code) {
  const int n = static_cast<int>(code.size());
  std::vector<std::uint64_t> out(n / 2 + 1, 0);
  count_matchings(edges_of(code), 0, 0, 0, out);
  return out;
}

inline std::vector<std::uint64_t> independent_sets(const std::string& code) {
  const int n = static_cast<int>(code.size());
  const Edges edges = edges_of(code);
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto [u, v] : edges) {
      if ((s >> u & 1) && (s >> v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) ++out[__builtin_popcount(s)];
  }
  return out;
}

inline std::uint64_t sum(const std::vector<std::uint64_t>& v) {
  std::uint64_t t = 0;
  for (auto x : v) t += x;
  return t;
}

}  // namespace oracle
