#include "raag/centralizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace raag {

namespace {

// Dependence order of the trace: i < j are dependent when the syllables
// cannot be shuffled past each other.
bool dependent(const Graph& g, const Syllable& a, const Syllable& b) {
  return a.gen == b.gen || !g.adjacent(a.gen, b.gen);
}

// Enumerate order ideals (downward-closed subsets) of size `want` of the
// trace of `w`, in lexicographic position order. Returns the first ideal for
// which `test` succeeds.
template <typename Test>
std::optional<std::uint64_t> first_ideal(const Graph& g, const std::vector<Syllable>& w, int want,
                                         Test test) {
  const int n = static_cast<int>(w.size());
  std::optional<std::uint64_t> found;
  // decide positions in order; excluded positions forbid later dependents
  auto rec = [&](auto&& self, int pos, int chosen, std::uint64_t mask,
                 std::uint64_t excluded) -> bool {
    if (chosen == want) {
      if (test(mask)) {
        found = mask;
        return true;
      }
      return false;
    }
    if (pos == n || chosen + (n - pos) < want) return false;
    // include pos if permitted: every earlier dependent must be in the ideal
    bool can_include = true;
    for (int q = 0; q < pos && can_include; ++q)
      if (dependent(g, w[q], w[pos]) && !(mask >> q & 1)) can_include = false;
    if (can_include && self(self, pos + 1, chosen + 1, mask | (std::uint64_t{1} << pos), excluded))
      return true;
    return self(self, pos + 1, chosen, mask, excluded | (std::uint64_t{1} << pos));
  };
  rec(rec, 0, 0, 0, 0);
  return found;
}

struct FactorRoot {
  NormalForm root;
  int power;
};

// Primitive root of a cyclically reduced word whose support is a single
// irreducible join factor. Syllable counts are multiplicative under powers
// here, so candidate roots are the size-(n/k) prefix ideals of the trace.
FactorRoot irreducible_root(const Group& gp, const std::vector<Syllable>& sylls) {
  const Graph& g = gp.graph();
  const int n = static_cast<int>(sylls.size());
  NormalForm whole = reduce(Word(gp, sylls));
  if (n > 64) {
    // beyond the ideal-enumeration bitmask: try rotation-aligned prefixes only
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      for (int off = 0; off < n; ++off) {
        std::vector<Syllable> rot(sylls.begin() + off, sylls.end());
        rot.insert(rot.end(), sylls.begin(), sylls.begin() + off);
        std::vector<Syllable> cand(rot.begin(), rot.begin() + d);
        NormalForm rotated = reduce(Word(gp, rot));
        if (power(Word(gp, cand), n / d) == rotated) {
          std::vector<Syllable> pre(sylls.begin(), sylls.begin() + off);
          return {conjugate(Word(gp, pre), Word(gp, cand)), n / d};
        }
      }
    }
    return {whole, 1};
  }
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const int m = n / d;
    auto build = [&](std::uint64_t mask) {
      std::vector<Syllable> cand;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) cand.push_back(sylls[i]);
      return cand;
    };
    auto hit = first_ideal(g, sylls, d, [&](std::uint64_t mask) {
      return power(Word(gp, build(mask)), m) == whole;
    });
    if (hit) return {reduce(Word(gp, build(*hit))), m};
  }
  return {whole, 1};
}

}  // namespace

std::pair<NormalForm, int> primitive_root(const Word& w) {
  if (w.group().domain().is_modular())
    throw std::invalid_argument("primitive_root: infinite exponent domain required");
  NormalForm nf = reduce(w);
  if (nf.is_identity()) throw std::invalid_argument("primitive_root: identity input");
  CyclicNormalForm cyc = cyclic_reduce(w);
  const Group& gp = w.group();
  const Graph& g = gp.graph();

  VertexSet supp = support(cyc.core.word());
  auto parts = join_decomposition_within(g, supp);
  std::vector<FactorRoot> roots;
  for (const auto& part : parts) {
    std::vector<Syllable> sub;
    for (const auto& s : cyc.core.syllables())
      if (part.contains(s.gen)) sub.push_back(s);
    NormalForm factor = reduce(Word(gp, std::move(sub)));
    if (factor.length() == 1) {
      // single merged syllable u^K
      const Syllable s = factor.syllables().front();
      const std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
      roots.push_back({reduce(Word(gp, {{s.gen, s.exp < 0 ? -1 : 1}})), static_cast<int>(k)});
    } else {
      roots.push_back(irreducible_root(gp, factor.syllables()));
    }
  }

  int m = 0;
  for (const auto& r : roots) m = std::gcd(m, r.power);
  std::vector<Syllable> core_root;
  for (const auto& r : roots) {
    NormalForm piece = power(r.root.word(), r.power / m);
    core_root.insert(core_root.end(), piece.syllables().begin(), piece.syllables().end());
  }
  NormalForm root = conjugate(cyc.conjugator.word(), Word(gp, std::move(core_root)));
  return {root, m};
}

CentralizerDescription centralizer(const Word& w) {
  if (w.group().domain().is_modular())
    throw std::invalid_argument("centralizer: infinite exponent domain required");
  const Group& gp = w.group();
  const Graph& g = gp.graph();
  NormalForm nf = reduce(w);
  if (nf.is_identity()) {
    CentralizerDescription d;
    d.whole_group = true;
    d.conjugator = identity(gp);
    d.link_part = g.all_vertices();
    return d;
  }
  CyclicNormalForm cyc = cyclic_reduce(w);
  VertexSet supp = support(cyc.core.word());
  CentralizerDescription d;
  d.conjugator = cyc.conjugator;
  for (const auto& part : join_decomposition_within(g, supp)) {
    std::vector<Syllable> sub;
    for (const auto& s : cyc.core.syllables())
      if (part.contains(s.gen)) sub.push_back(s);
    auto [root, m] = primitive_root(Word(gp, std::move(sub)));
    NormalForm inv = invert(root.word());
    d.factors.push_back(compare_canonical(inv, root) < 0 ? inv : root);
  }
  d.link_part = link(g, supp);
  return d;
}

bool commutes(const Word& w1, const Word& w2) {
  return multiply(w1, w2) == multiply(w2, w1);
}

}  // namespace raag
