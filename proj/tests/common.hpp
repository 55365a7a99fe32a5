#pragma once

// Shared fixtures for the test suites.

#include <string>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::testing {

inline Graph cycle(int n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(names, edges);
}

inline Graph path_graph(int n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(names, edges);
}

inline Graph edgeless(int n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Graph(names, {});
}

// The 5-cycle (a, b, c, d, e), vertex order a < b < c < d < e.
inline Graph c5_graph() {
  return parse_graph(
      "vertices: a b c d e\n"
      "edge: a b\nedge: b c\nedge: c d\nedge: d e\nedge: e a\n");
}

// 4-cycle (a, b, c, d) plus e, f each adjacent to a, b, c, d.
inline Graph centralizer_example_graph() {
  return parse_graph(
      "vertices: a b c d e f\n"
      "edge: a b\nedge: b c\nedge: c d\nedge: d a\n"
      "edge: e a\nedge: e b\nedge: e c\nedge: e d\n"
      "edge: f a\nedge: f b\nedge: f c\nedge: f d\n");
}

// Path (a, b, c, d).
inline Graph p3_path_graph() {
  return parse_graph("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\n");
}

inline Group infinite_group(const Graph& g) { return Group(g, ExponentDomain::infinite()); }
inline Group modular_group(const Graph& g, int ell) { return Group(g, ExponentDomain::modular(ell)); }

inline NormalForm nf(const std::string& text, const Group& g) {
  return reduce(parse_word(text, g));
}

}  // namespace raag::testing
