#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace raag::testing {

namespace {

using Seq = std::vector<Syllable>;

std::string key_of(const Seq& s) {
  std::string k;
  k.reserve(s.size() * 10);
  for (const auto& syl : s) {
    k += std::to_string(syl.gen);
    k += '^';
    k += std::to_string(syl.exp);
    k += '.';
  }
  return k;
}

std::int64_t norm_exp(std::int64_t e, int modulus) {
  if (modulus == 0) return e;
  e %= modulus;
  if (e < 0) e += modulus;
  return e;
}

// One rewrite step: all shuffles of adjacent commuting syllables and all
// merges of adjacent equal-generator syllables.
void neighbours(const Graph& g, int modulus, const Seq& s, std::vector<Seq>& shuffles,
                std::vector<Seq>& merges) {
  shuffles.clear();
  merges.clear();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].gen == s[i + 1].gen) {
      Seq t;
      t.reserve(s.size());
      t.insert(t.end(), s.begin(), s.begin() + i);
      std::int64_t e = norm_exp(s[i].exp + s[i + 1].exp, modulus);
      if (e != 0) t.push_back({s[i].gen, e});
      t.insert(t.end(), s.begin() + i + 2, s.end());
      merges.push_back(std::move(t));
    } else if (g.adjacent(s[i].gen, s[i + 1].gen)) {
      Seq t = s;
      std::swap(t[i], t[i + 1]);
      shuffles.push_back(std::move(t));
    }
  }
}

// Explore the shuffle orbit; as soon as any merge is available apply it and
// restart. All maximal rewrite paths of a word end at the same length, so one
// greedy merge path reaches the element's minimal length.
Seq rewrite_to_minimal(const Graph& g, int modulus, Seq s) {
  for (auto& syl : s) syl.exp = norm_exp(syl.exp, modulus);
  s.erase(std::remove_if(s.begin(), s.end(), [](const Syllable& x) { return x.exp == 0; }),
          s.end());
  std::vector<Seq> shuffles, merges;
  for (;;) {
    std::unordered_set<std::string> seen{key_of(s)};
    std::deque<Seq> queue{s};
    bool merged = false;
    while (!queue.empty() && !merged) {
      Seq cur = std::move(queue.front());
      queue.pop_front();
      neighbours(g, modulus, cur, shuffles, merges);
      if (!merges.empty()) {
        s = merges.front();
        merged = true;
        break;
      }
      for (auto& t : shuffles)
        if (seen.insert(key_of(t)).second) queue.push_back(std::move(t));
    }
    if (!merged) return s;
  }
}

// Least key over the shuffle orbit of a minimal representative.
std::string orbit_min_key(const Graph& g, int modulus, const Seq& minimal) {
  std::unordered_set<std::string> seen{key_of(minimal)};
  std::deque<Seq> queue{minimal};
  std::string best = key_of(minimal);
  std::vector<Seq> shuffles, merges;
  while (!queue.empty()) {
    Seq cur = std::move(queue.front());
    queue.pop_front();
    neighbours(g, modulus, cur, shuffles, merges);
    for (auto& t : shuffles) {
      auto k = key_of(t);
      if (seen.insert(k).second) {
        if (k < best) best = k;
        queue.push_back(std::move(t));
      }
    }
  }
  return best;
}

}  // namespace

int brute_min_syllables(const Graph& g, int modulus, const std::vector<Syllable>& word) {
  return static_cast<int>(rewrite_to_minimal(g, modulus, word).size());
}

std::string brute_element_key(const Graph& g, int modulus, const std::vector<Syllable>& word) {
  return orbit_min_key(g, modulus, rewrite_to_minimal(g, modulus, word));
}

std::size_t brute_ball_size(const Graph& g, int ell, int radius) {
  std::unordered_set<std::string> elements;
  Seq stack;
  // enumerate all raw sequences of length <= radius over gens x (1..ell-1)
  auto rec = [&](auto&& self, int depth) -> void {
    Seq minimal = rewrite_to_minimal(g, ell, stack);
    if (static_cast<int>(minimal.size()) <= radius)
      elements.insert(orbit_min_key(g, ell, minimal));
    if (depth == radius) return;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int k = 1; k < ell; ++k) {
        stack.push_back({u, k});
        self(self, depth + 1);
        stack.pop_back();
      }
  };
  rec(rec, 0);
  return elements.size();
}

std::vector<std::string> brute_conjugates(const Graph& g, const std::vector<Syllable>& word,
                                          int conj_len) {
  std::unordered_set<std::string> keys;
  Seq conj;
  auto consider = [&]() {
    Seq full;
    full.insert(full.end(), conj.begin(), conj.end());
    full.insert(full.end(), word.begin(), word.end());
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) full.push_back({it->gen, -it->exp});
    keys.insert(brute_element_key(g, 0, full));
  };
  auto rec = [&](auto&& self, int depth) -> void {
    consider();
    if (depth == conj_len) return;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int e : {1, -1}) {
        conj.push_back({u, e});
        self(self, depth + 1);
        conj.pop_back();
      }
  };
  rec(rec, 0);
  return {keys.begin(), keys.end()};
}

}  // namespace raag::testing
