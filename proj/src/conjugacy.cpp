#include "raag/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace raag {

namespace {

std::vector<int> head_positions(const Graph& g, const std::vector<Syllable>& w) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    bool is_head = true;
    for (int j = 0; j < i; ++j)
      if (!g.adjacent(w[j].gen, w[i].gen)) {
        is_head = false;
        break;
      }
    if (is_head) out.push_back(i);
  }
  return out;
}

std::vector<int> tail_positions(const Graph& g, const std::vector<Syllable>& w) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    bool is_tail = true;
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(w[j].gen, w[i].gen)) {
        is_tail = false;
        break;
      }
    if (is_tail) out.push_back(i);
  }
  return out;
}

// One conjugation step killing a head/tail merge pair. `piece` is the left
// conjugator contribution: current = piece * next * piece^-1.
struct Move {
  Syllable piece;
  std::vector<Syllable> next;  // raw, to be reduced
};

std::int64_t letters(const Syllable& s) { return s.exp < 0 ? -s.exp : s.exp; }

// Pivot pairs are distinct head/tail positions carrying the same generator.
// Of the two ways to resolve one (rotate the tail syllable to the front, or
// the head syllable to the end) keep the conjugator piece short.
std::optional<Move> best_move(const Graph& g, const std::vector<Syllable>& w) {
  auto heads = head_positions(g, w);
  auto tails = tail_positions(g, w);
  std::optional<Move> best;
  std::int64_t best_cost = 0;
  auto consider = [&](Syllable piece, int removed, bool to_front) {
    std::int64_t cost = letters(piece);
    if (best && (cost > best_cost ||
                 (cost == best_cost && !syllable_less(piece, best->piece))))
      return;
    Move m;
    m.piece = piece;
    if (to_front) m.next.push_back(w[removed]);
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
      if (k != removed) m.next.push_back(w[k]);
    if (!to_front) m.next.push_back(w[removed]);
    best = std::move(m);
    best_cost = cost;
  };
  for (int i : heads)
    for (int j : tails) {
      if (i == j || w[i].gen != w[j].gen) continue;
      consider({w[j].gen, -w[j].exp}, j, true);   // tail to front
      consider({w[i].gen, w[i].exp}, i, false);   // head to end
    }
  return best;
}

}  // namespace

CyclicNormalForm cyclic_reduce(const Word& w) {
  const Group& gp = w.group();
  const Graph& g = gp.graph();
  NormalForm cur = reduce(w);
  std::vector<Syllable> conj;
  for (;;) {
    auto move = best_move(g, cur.syllables());
    if (!move) break;
    conj.push_back(move->piece);
    cur = reduce(Word(gp, std::move(move->next)));
  }
  return {cur, reduce(Word(gp, std::move(conj)))};
}

std::optional<NormalForm> conjugate_test(const Word& w1, const Word& w2) {
  if (!same_group(w1.group(), w2.group()))
    throw std::invalid_argument("conjugate_test: words over different groups");
  const Group& gp = w1.group();
  const Graph& g = gp.graph();
  CyclicNormalForm c1 = cyclic_reduce(w1);
  CyclicNormalForm c2 = cyclic_reduce(w2);
  // cyclically reduced conjugates differ by shuffles and rotations, which
  // preserve length and the syllable multiset
  if (c1.core.length() != c2.core.length()) return std::nullopt;
  {
    auto m1 = c1.core.syllables();
    auto m2 = c2.core.syllables();
    std::sort(m1.begin(), m1.end(), syllable_less);
    std::sort(m2.begin(), m2.end(), syllable_less);
    if (m1 != m2) return std::nullopt;
  }
  auto witness = [&](const std::vector<Syllable>& path) {
    // c1.core = path * c2.core * path^-1, so w1 = (x1 path x2^-1) w2 (...)^-1
    NormalForm xe = multiply(c1.conjugator.word(), Word(gp, path));
    return multiply(xe.word(), invert(c2.conjugator.word()).word());
  };
  if (c1.core == c2.core) return witness({});

  // close c1.core under single-syllable rotations, hunting for c2.core
  struct State {
    NormalForm nf;
    std::vector<Syllable> path;  // state = path^-1 * core1 * path
  };
  std::unordered_set<std::string> seen{to_string(c1.core)};
  std::deque<State> queue;
  queue.push_back({c1.core, {}});
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    for (int i : head_positions(g, st.nf.syllables())) {
      Syllable s = st.nf.syllables()[i];
      std::vector<Syllable> next;
      next.reserve(st.nf.length());
      for (int k = 0; k < st.nf.length(); ++k)
        if (k != i) next.push_back(st.nf.syllables()[k]);
      next.push_back(s);
      NormalForm rotated = reduce(Word(gp, std::move(next)));
      if (!seen.insert(to_string(rotated)).second) continue;
      std::vector<Syllable> path = st.path;
      path.push_back(s);
      if (rotated == c2.core) {
        // rotated = path^-1 * core1 * path, hence core1 = path * core2 * path^-1
        return witness(path);
      }
      queue.push_back({rotated, std::move(path)});
    }
  }
  return std::nullopt;
}

VertexSet cyclic_support(const Word& w) { return support(cyclic_reduce(w).core.word()); }

}  // namespace raag
