#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace raag {

namespace {
constexpr int kBitRowLimit = 4096;
}

VertexSet::VertexSet(std::vector<int> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) verts_.insert(it, v);
}

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
  const int n = static_cast<int>(names_.size());
  {
    std::set<std::string> seen;
    for (const auto& nm : names_) {
      if (nm.empty()) throw ParseError(0, "empty vertex name");
      if (!seen.insert(nm).second) throw ParseError(0, "duplicate vertex name '" + nm + "'");
    }
  }
  adj_.assign(n, {});
  std::set<std::pair<int, int>> seen_edges;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(0, "edge endpoint out of range");
    if (u == v) throw ParseError(0, "self-loop at vertex '" + names_[u] + "'");
    auto key = std::minmax(u, v);
    if (!seen_edges.insert(key).second)
      throw ParseError(0, "duplicate edge " + names_[u] + " " + names_[v]);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  edge_count_ = static_cast<int>(seen_edges.size());
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  if (n <= kBitRowLimit) {
    const int words = (n + 63) / 64;
    bits_.assign(n, std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < n; ++u)
      for (int v : adj_[u]) bits_[u][v / 64] |= (std::uint64_t{1} << (v % 64));
  }
}

std::optional<int> Graph::index_of(std::string_view name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Graph::adjacent(int u, int v) const {
  if (!bits_.empty()) return (bits_[u][v / 64] >> (v % 64)) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::same_structure(const Graph& other) const {
  return names_ == other.names_ && edges() == other.edges();
}

VertexSet Graph::all_vertices() const {
  std::vector<int> v(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) v[i] = i;
  return VertexSet(std::move(v));
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  bool have_vertices = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::pair<int, int>> seen_edges;
  auto index_of = [&](const std::string& nm) -> int {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == nm) return i;
    return -1;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::string body = line.substr(first);
    if (!body.empty() && body.back() == '\r') body.pop_back();
    if (body.rfind("vertices:", 0) == 0) {
      if (have_vertices) throw ParseError(lineno, "second vertices: line");
      have_vertices = true;
      for (const auto& nm : split_ws(body.substr(9))) {
        if (!valid_name(nm)) throw ParseError(lineno, "invalid vertex name '" + nm + "'");
        if (index_of(nm) >= 0) throw ParseError(lineno, "duplicate vertex '" + nm + "'");
        names.push_back(nm);
      }
    } else if (body.rfind("edge:", 0) == 0) {
      if (!have_vertices) throw ParseError(lineno, "edge: line before vertices: line");
      auto toks = split_ws(body.substr(5));
      if (toks.size() != 2) throw ParseError(lineno, "edge: expects exactly two vertex names");
      int u = index_of(toks[0]);
      int v = index_of(toks[1]);
      if (u < 0) throw ParseError(lineno, "unknown vertex '" + toks[0] + "'");
      if (v < 0) throw ParseError(lineno, "unknown vertex '" + toks[1] + "'");
      if (u == v) throw ParseError(lineno, "self-loop at '" + toks[0] + "'");
      if (!seen_edges.insert(std::minmax(u, v)).second)
        throw ParseError(lineno, "duplicate edge " + toks[0] + " " + toks[1]);
      edges.emplace_back(u, v);
    } else {
      throw ParseError(lineno, "malformed line: " + body);
    }
  }
  if (!have_vertices) throw ParseError(0, "missing vertices: line");
  return Graph(std::move(names), edges);
}

std::string to_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& nm : g.names()) out << ' ' << nm;
  out << '\n';
  for (auto [u, v] : g.edges()) out << "edge: " << g.name(u) << ' ' << g.name(v) << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>* labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << '"';
    if (labels) out << " [label=\"" << (*labels)[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

VertexSet star(const Graph& g, int u) {
  if (u < 0 || u >= g.vertex_count()) throw std::out_of_range("star: unknown vertex");
  std::vector<int> v = g.neighbors(u);
  v.push_back(u);
  return VertexSet(std::move(v));
}

VertexSet link(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    bool all = true;
    for (int u : s)
      if (!g.adjacent(u, v)) {
        all = false;
        break;
      }
    if (all) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

Graph opposite_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.names(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<std::string> names;
  std::vector<int> orig;
  for (int v : s) {
    names.push_back(g.name(v));
    orig.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(orig.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(orig.size()); ++j)
      if (g.adjacent(orig[i], orig[j])) edges.emplace_back(i, j);
  return Graph(std::move(names), edges);
}

std::vector<VertexSet> join_decomposition_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  std::vector<char> done(g.vertex_count(), 0);
  for (int s : within) {
    if (done[s]) continue;
    // BFS over opposite-graph adjacency restricted to `within`
    std::vector<int> comp{s};
    done[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      int u = comp[k];
      for (int v : within) {
        if (done[v] || v == u) continue;
        if (!g.adjacent(u, v)) {
          done[v] = 1;
          comp.push_back(v);
        }
      }
    }
    parts.emplace_back(VertexSet(std::move(comp)));
  }
  return parts;
}

std::vector<VertexSet> join_decomposition(const Graph& g) {
  return join_decomposition_within(g, g.all_vertices());
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;
        if (g.adjacent(u, w)) return std::array<int, 3>{u, v, w};
      }
    }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// Backtracking mapper shared by induced-subgraph search and isomorphism.
// `exact_degree` additionally requires equal degrees (isomorphism case).
struct InducedSearch {
  const Graph& p;
  const Graph& h;
  std::vector<int> map;
  std::vector<char> used;
  std::vector<std::vector<char>> compat;

  InducedSearch(const Graph& pattern, const Graph& host, bool exact_degree)
      : p(pattern), h(host), map(pattern.vertex_count(), -1), used(host.vertex_count(), 0) {
    // host k-core filter, k = least pattern degree: the image of the pattern
    // is a subgraph of minimum degree k, so it survives the peeling
    std::vector<char> in_core(h.vertex_count(), 1);
    if (p.vertex_count() > 0) {
      int k = p.degree(0);
      for (int pv = 1; pv < p.vertex_count(); ++pv) k = std::min(k, p.degree(pv));
      if (k > 0) {
        std::vector<int> deg(h.vertex_count());
        std::vector<int> queue;
        for (int v = 0; v < h.vertex_count(); ++v) {
          deg[v] = h.degree(v);
          if (deg[v] < k) queue.push_back(v);
        }
        while (!queue.empty()) {
          int v = queue.back();
          queue.pop_back();
          if (!in_core[v]) continue;
          in_core[v] = 0;
          for (int w : h.neighbors(v))
            if (in_core[w] && --deg[w] < k) queue.push_back(w);
        }
      }
    }
    compat.assign(p.vertex_count(), std::vector<char>(h.vertex_count(), 0));
    for (int pv = 0; pv < p.vertex_count(); ++pv) {
      std::vector<int> pdeg;
      for (int q : p.neighbors(pv)) pdeg.push_back(p.degree(q));
      std::sort(pdeg.rbegin(), pdeg.rend());
      for (int hv = 0; hv < h.vertex_count(); ++hv) {
        if (!in_core[hv]) continue;
        if (exact_degree ? (h.degree(hv) != p.degree(pv)) : (h.degree(hv) < p.degree(pv)))
          continue;
        // neighbour-degree signature: k-th largest host neighbour degree
        // must dominate the pattern's
        std::vector<int> hdeg;
        for (int q : h.neighbors(hv)) hdeg.push_back(h.degree(q));
        std::sort(hdeg.rbegin(), hdeg.rend());
        bool ok = true;
        for (std::size_t k = 0; k < pdeg.size(); ++k)
          if (exact_degree ? false : hdeg[k] < pdeg[k]) {
            ok = false;
            break;
          }
        if (ok) compat[pv][hv] = 1;
      }
    }
  }

  bool consistent(int pv, int hv) const {
    for (int q = 0; q < pv; ++q)
      if (p.adjacent(q, pv) != h.adjacent(map[q], hv)) return false;
    return true;
  }

  bool extend(int pv) {
    if (pv == p.vertex_count()) return true;
    auto try_cand = [&](int hv) {
      if (used[hv] || !compat[pv][hv] || !consistent(pv, hv)) return false;
      map[pv] = hv;
      used[hv] = 1;
      if (extend(pv + 1)) return true;
      map[pv] = -1;
      used[hv] = 0;
      return false;
    };
    // iterate host candidates off the mapped pattern-neighbour with the
    // shortest neighbour list; the accepted set and its ascending order do
    // not depend on this choice
    int anchor = -1;
    for (int q = 0; q < pv; ++q)
      if (p.adjacent(q, pv) &&
          (anchor < 0 || h.degree(map[q]) < h.degree(map[anchor])))
        anchor = q;
    if (anchor >= 0) {
      for (int hv : h.neighbors(map[anchor]))
        if (try_cand(hv)) return true;
    } else {
      for (int hv = 0; hv < h.vertex_count(); ++hv)
        if (try_cand(hv)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced_subgraph(const Graph& pattern, const Graph& host) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  InducedSearch s(pattern, host, false);
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  std::vector<int> d1, d2;
  for (int v = 0; v < g1.vertex_count(); ++v) d1.push_back(g1.degree(v));
  for (int v = 0; v < g2.vertex_count(); ++v) d2.push_back(g2.degree(v));
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  InducedSearch s(g1, g2, true);
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace raag
