#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

// Error thrown by the text parsers; `line` is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
        line(line_) {}
};

// Sorted set of vertex indices of some parent graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> verts);
  static VertexSet of(std::initializer_list<int> verts) { return VertexSet(std::vector<int>(verts)); }

  bool contains(int v) const;
  bool subset_of(const VertexSet& other) const;
  void insert(int v);
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  const std::vector<int>& verts() const { return verts_; }
  auto begin() const { return verts_.begin(); }
  auto end() const { return verts_.end(); }
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> verts_;  // strictly increasing
};

// Finite simple graph over named vertices. Immutable after construction;
// vertex order is the construction order and drives every canonical form
// downstream.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edge_count_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  bool same_structure(const Graph& other) const;
  VertexSet all_vertices() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;            // sorted neighbour lists
  std::vector<std::vector<std::uint64_t>> bits_;  // bit rows, only for small graphs
  int edge_count_ = 0;
};

// Graph file format: optional '#' comment lines, one "vertices:" line,
// zero or more "edge: u v" lines. Names match [A-Za-z][A-Za-z0-9_]*.
Graph parse_graph(const std::string& text);
std::string to_graph_file(const Graph& g);
std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

VertexSet star(const Graph& g, int u);
VertexSet link(const Graph& g, const VertexSet& s);
Graph opposite_graph(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition of V(g) into the connected components of the opposite graph,
// ordered by least vertex. Singleton list iff g is irreducible.
std::vector<VertexSet> join_decomposition(const Graph& g);
// Same, restricted to the induced subgraph on `within`.
std::vector<VertexSet> join_decomposition_within(const Graph& g, const VertexSet& within);

bool is_triangle_free(const Graph& g);
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Vertex bijection g1 -> g2 preserving adjacency both ways, if one exists.
std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2);

// Injective map pattern -> host preserving adjacency AND non-adjacency.
// Deterministic: pattern vertices are processed in order, host candidates
// explored in ascending vertex order.
std::optional<std::vector<int>> find_induced_subgraph(const Graph& pattern, const Graph& host);

}  // namespace raag
