#include "raag/qm.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace raag {

bool hyperplane_less(const Hyperplane& a, const Hyperplane& b) {
  if (a.rep.length() != b.rep.length()) return a.rep.length() < b.rep.length();
  int c = compare_canonical(a.rep, b.rep);
  if (c != 0) return c < 0;
  return a.gen < b.gen;
}

std::string to_string(const Hyperplane& h) {
  return to_string(h.rep) + "|" + h.rep.group().graph().name(h.gen);
}

std::string hyperplane_vertex_name(const Hyperplane& h) {
  const Graph& g = h.rep.group().graph();
  std::ostringstream out;
  if (h.rep.is_identity()) {
    out << "J_" << g.name(h.gen);
    return out.str();
  }
  out << "H_";
  for (const auto& s : h.rep.syllables()) {
    out << g.name(s.gen);
    if (s.exp != 1) out << (s.exp < 0 ? "m" : "p") << (s.exp < 0 ? -s.exp : s.exp);
    out << '_';
  }
  out << "J_" << g.name(h.gen);
  return out.str();
}

Hyperplane canonical_hyperplane(const Word& g, int u) {
  const Graph& graph = g.group().graph();
  if (u < 0 || u >= graph.vertex_count())
    throw std::out_of_range("canonical_hyperplane: unknown vertex");
  // strip the maximal <star(u)> suffix: project the inverse onto <star(u)>
  auto split = parabolic_projection(invert(g).word(), star(graph, u));
  return {u, invert(split.remainder.word())};
}

bool transverse(const Hyperplane& h1, const Hyperplane& h2) {
  if (!same_group(h1.rep.group(), h2.rep.group()))
    throw std::invalid_argument("transverse: hyperplanes over different groups");
  if (h1 == h2) return false;
  const Graph& g = h1.rep.group().graph();
  if (!g.adjacent(h1.gen, h2.gen)) return false;
  NormalForm diff = multiply(invert(h1.rep.word()).word(), h2.rep.word());
  return in_parabolic_product(diff.word(), star(g, h1.gen), star(g, h2.gen));
}

std::size_t Ball::size() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.size();
  return n;
}

std::vector<NormalForm> Ball::all() const {
  std::vector<NormalForm> out;
  out.reserve(size());
  for (const auto& level : levels_)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

Ball ball(const Group& group, int radius) {
  if (!group.domain().is_modular())
    throw std::invalid_argument("ball: modular exponent domain required (infinite balls are unbounded)");
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  const Graph& g = group.graph();
  const int ell = group.domain().modulus;
  std::vector<std::vector<NormalForm>> levels;
  levels.push_back({identity(group)});
  std::unordered_set<std::string> seen{to_string(levels[0][0])};
  for (int r = 1; r <= radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& el : levels[r - 1]) {
      for (int u = 0; u < g.vertex_count(); ++u) {
        for (int k = 1; k < ell; ++k) {
          NormalForm cand = multiply(el.word(), Word(group, {{u, k}}));
          if (cand.length() != r) continue;
          if (seen.insert(to_string(cand)).second) next.push_back(std::move(cand));
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const NormalForm& a, const NormalForm& b) { return compare_canonical(a, b) < 0; });
    levels.push_back(std::move(next));
  }
  return Ball(group, radius, std::move(levels));
}

std::vector<Hyperplane> hyperplanes_of_ball(const Ball& b) {
  const Graph& g = b.group().graph();
  std::vector<Hyperplane> out;
  std::unordered_set<std::string> seen;
  for (const auto& level : b.levels()) {
    for (const NormalForm& el : level) {
      for (int u = 0; u < g.vertex_count(); ++u) {
        Hyperplane h = canonical_hyperplane(el.word(), u);
        if (seen.insert(to_string(h)).second) out.push_back(std::move(h));
      }
    }
  }
  std::sort(out.begin(), out.end(), hyperplane_less);
  return out;
}

namespace {

void parallel_chunks(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(1, n / (nthreads * 8));
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t lo = next.fetch_add(chunk);
        if (lo >= n) return;
        fn(lo, std::min(n, lo + chunk));
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

namespace {

// Allocation-free transversality for the quadratic pair stage. Same
// semantics as transverse(); words stay tiny, so fixed buffers suffice.
class PairTester {
 public:
  explicit PairTester(const Group& group)
      : g_(group.graph()), modulus_(group.domain().modulus) {
    const int n = g_.vertex_count();
    star_.assign(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u) {
      star_[u][u] = 1;
      for (int v : g_.neighbors(u)) star_[u][v] = 1;
    }
  }

  bool operator()(const Hyperplane& a, const Hyperplane& b) {
    if (a.gen == b.gen) return false;  // identical or parallel walls
    if (!g_.adjacent(a.gen, b.gen)) return false;
    // diff = rep_a^-1 * rep_b, reduced
    len_ = 0;
    const auto& ra = a.rep.syllables();
    for (auto it = ra.rbegin(); it != ra.rend(); ++it) insert({it->gen, negate(it->exp)});
    for (const auto& s : b.rep.syllables()) insert(s);
    // strip <star(a.gen)> head syllables, then the rest must live in
    // <star(b.gen)>
    const auto& star1 = star_[a.gen];
    const auto& star2 = star_[b.gen];
    for (bool progress = true; progress;) {
      progress = false;
      for (int i = 0; i < len_; ++i) {
        if (!star1[buf_[i].gen]) continue;
        bool is_head = true;
        for (int j = 0; j < i; ++j)
          if (!g_.adjacent(buf_[j].gen, buf_[i].gen)) {
            is_head = false;
            break;
          }
        if (is_head) {
          erase(i);
          progress = true;
          break;
        }
      }
    }
    for (int i = 0; i < len_; ++i)
      if (!star2[buf_[i].gen]) return false;
    return true;
  }

 private:
  std::int64_t negate(std::int64_t e) const { return modulus_ ? modulus_ - e : -e; }

  void erase(int i) {
    for (int k = i + 1; k < len_; ++k) buf_[k - 1] = buf_[k];
    --len_;
  }

  void insert(Syllable s) {
    if (modulus_) {
      s.exp %= modulus_;
      if (s.exp < 0) s.exp += modulus_;
    }
    if (s.exp == 0) return;
    for (int j = len_ - 1; j >= 0; --j) {
      if (buf_[j].gen == s.gen) {
        std::int64_t e = buf_[j].exp + s.exp;
        if (modulus_) e %= modulus_;
        if (e == 0) {
          // deletion can unblock earlier merges: re-insert the tail
          int tail_len = len_ - j - 1;
          Syllable tail[kCap];
          for (int k = 0; k < tail_len; ++k) tail[k] = buf_[j + 1 + k];
          len_ = j;
          for (int k = 0; k < tail_len; ++k) insert(tail[k]);
        } else {
          buf_[j].exp = e;
        }
        return;
      }
      if (!g_.adjacent(buf_[j].gen, s.gen)) break;
    }
    if (len_ >= kCap) throw std::length_error("PairTester: word too long");
    buf_[len_++] = s;
  }

  static constexpr int kCap = 64;
  const Graph& g_;
  int modulus_;
  std::vector<std::vector<char>> star_;
  Syllable buf_[kCap];
  int len_ = 0;
};

}  // namespace

CrossingGraph crossing_graph(const std::vector<Hyperplane>& hs, int threads) {
  const std::size_t n = hs.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!same_group(hs[i].rep.group(), hs[0].rep.group()))
      throw std::invalid_argument("crossing_graph: hyperplanes over different groups");

  std::vector<std::vector<int>> rows(n);
  if (n > 0) {
    const Group& group = hs[0].rep.group();
    parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
      PairTester tester(group);
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (tester(hs[i], hs[j])) rows[i].push_back(static_cast<int>(j));
    });
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (int j : rows[i]) edges.emplace_back(static_cast<int>(i), j);

  std::vector<std::string> names;
  std::vector<std::string> labels;
  std::unordered_set<std::string> used;
  names.reserve(n);
  for (const auto& h : hs) {
    std::string nm = hyperplane_vertex_name(h);
    while (!used.insert(nm).second) nm += "_x";
    names.push_back(nm);
    labels.push_back(to_string(h));
  }
  return {hs, Graph(std::move(names), edges), std::move(labels)};
}

HyperplaneEdgeIndex::HyperplaneEdgeIndex(const Group& group, int radius)
    : ball_(::raag::ball(group, radius)) {
  elements_ = ball_.all();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    element_id_[to_string(elements_[i])] = static_cast<int>(i);
  const Graph& g = group.graph();
  const int ell = group.domain().modulus;
  const int nv = g.vertex_count();
  uf_.resize(elements_.size() * nv);
  for (std::size_t i = 0; i < uf_.size(); ++i) uf_[i] = static_cast<int>(i);
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) uf_[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    for (int u = 0; u < nv; ++u) {
      // clique closure: all elements of e*<u> share the wall
      for (int k = 1; k < ell; ++k) {
        NormalForm t = multiply(elements_[e].word(), Word(group, {{u, k}}));
        auto it = element_id_.find(to_string(t));
        if (it != element_id_.end()) unite(static_cast<int>(e) * nv + u, it->second * nv + u);
      }
      // prism closure: opposite sides of 4-cycles spanned with adjacent v
      for (int v : g.neighbors(u)) {
        for (int k = 1; k < ell; ++k) {
          NormalForm t = multiply(elements_[e].word(), Word(group, {{v, k}}));
          auto it = element_id_.find(to_string(t));
          if (it != element_id_.end()) unite(static_cast<int>(e) * nv + u, it->second * nv + u);
        }
      }
    }
  }
  // prism corners: for every element and adjacent u, v the walls through the
  // two incident cliques cross there
  corners_.assign(nv, std::vector<std::unordered_set<std::uint64_t>>(nv));
  for (std::size_t e = 0; e < elements_.size(); ++e)
    for (int u = 0; u < nv; ++u)
      for (int v : g.neighbors(u)) {
        const std::uint64_t cu = static_cast<std::uint64_t>(find(static_cast<int>(e) * nv + u));
        const std::uint64_t cv = static_cast<std::uint64_t>(find(static_cast<int>(e) * nv + v));
        corners_[u][v].insert((cu << 32) | cv);
      }
}

int HyperplaneEdgeIndex::find(int x) const {
  while (uf_[x] != x) {
    uf_[x] = uf_[uf_[x]];
    x = uf_[x];
  }
  return x;
}

int HyperplaneEdgeIndex::wall_class(const NormalForm& element, int gen) const {
  auto it = element_id_.find(to_string(element));
  if (it == element_id_.end())
    throw std::invalid_argument("wall_class: element outside the indexed ball");
  const int nv = ball_.group().graph().vertex_count();
  return find(it->second * nv + gen);
}

bool HyperplaneEdgeIndex::transverse_geometric(const Hyperplane& h1, const Hyperplane& h2) const {
  if (h1 == h2) return false;
  const Graph& g = ball_.group().graph();
  if (!g.adjacent(h1.gen, h2.gen)) return false;  // 4-cycles need commuting labels
  const std::uint64_t c1 = static_cast<std::uint64_t>(wall_class(h1.rep, h1.gen));
  const std::uint64_t c2 = static_cast<std::uint64_t>(wall_class(h2.rep, h2.gen));
  return corners_[h1.gen][h2.gen].count((c1 << 32) | c2) > 0;
}

bool geometric_transverse_oracle(const Hyperplane& h1, const Hyperplane& h2, int search_radius) {
  HyperplaneEdgeIndex index(h1.rep.group(), search_radius);
  return index.transverse_geometric(h1, h2);
}

}  // namespace raag
