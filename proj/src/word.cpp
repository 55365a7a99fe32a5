#include "raag/word.hpp"

#include <algorithm>
#include <sstream>

namespace raag {

namespace {

std::int64_t normalize_exp(std::int64_t e, int modulus) {
  if (modulus == 0) return e;
  e %= modulus;
  if (e < 0) e += modulus;
  return e;
}

// Insert one syllable at the right end of a graphically reduced accumulator,
// scanning backwards past commuting syllables for a merge partner. Deleting
// a syllable may unblock earlier merges, so the tail is re-inserted.
void insert_syllable(const Graph& g, int modulus, std::vector<Syllable>& acc, Syllable s) {
  s.exp = normalize_exp(s.exp, modulus);
  if (s.exp == 0) return;
  for (int j = static_cast<int>(acc.size()) - 1; j >= 0; --j) {
    if (acc[j].gen == s.gen) {
      std::int64_t e = normalize_exp(acc[j].exp + s.exp, modulus);
      if (e == 0) {
        std::vector<Syllable> tail(acc.begin() + j + 1, acc.end());
        acc.erase(acc.begin() + j, acc.end());
        for (const Syllable& t : tail) insert_syllable(g, modulus, acc, t);
      } else {
        acc[j].exp = e;
      }
      return;
    }
    if (!g.adjacent(acc[j].gen, s.gen)) break;
  }
  acc.push_back(s);
}

// Canonical linearization of a reduced word's shuffle class: repeatedly emit
// the least syllable among those shufflable to the front.
void canonicalize(const Graph& g, std::vector<Syllable>& w) {
  std::vector<Syllable> rest = std::move(w);
  std::vector<Syllable> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      bool is_head = true;
      for (int j = 0; j < i; ++j)
        if (!g.adjacent(rest[j].gen, rest[i].gen)) {
          is_head = false;
          break;
        }
      if (is_head && (best < 0 || syllable_less(rest[i], rest[best]))) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  w = std::move(out);
}

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

}  // namespace

bool syllable_less(const Syllable& a, const Syllable& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  const std::int64_t la = a.exp < 0 ? -a.exp : a.exp;
  const std::int64_t lb = b.exp < 0 ? -b.exp : b.exp;
  if (la != lb) return la < lb;
  return a.exp > b.exp;  // positive before negative
}

Word::Word(Group group, std::vector<Syllable> syllables)
    : group_(std::move(group)), sylls_(std::move(syllables)) {
  if (!group_.valid()) throw std::invalid_argument("word over an invalid group");
  const int n = group_.graph().vertex_count();
  const int m = group_.domain().modulus;
  for (auto& s : sylls_) {
    if (s.gen < 0 || s.gen >= n) throw std::invalid_argument("syllable generator out of range");
    s.exp = normalize_exp(s.exp, m);
    if (s.exp == 0) throw std::invalid_argument("zero syllable exponent");
  }
}

Word parse_word(const std::string& text, const Group& group) {
  std::vector<Syllable> sylls;
  std::istringstream in(text);
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "1") return Word(group, {});
  for (const auto& t : toks) {
    auto caret = t.find('^');
    std::string name = t.substr(0, caret);
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      const std::string es = t.substr(caret + 1);
      try {
        std::size_t pos = 0;
        e = std::stoll(es, &pos);
        if (pos != es.size()) throw std::invalid_argument("");
      } catch (...) {
        throw ParseError(0, "malformed token '" + t + "'");
      }
    }
    auto idx = group.graph().index_of(name);
    if (!idx) throw ParseError(0, "unknown generator '" + name + "'");
    if (e == 0) throw ParseError(0, "zero exponent in token '" + t + "'");
    if (group.domain().is_modular() && normalize_exp(e, group.domain().modulus) == 0)
      throw ParseError(0, "exponent vanishes mod " + std::to_string(group.domain().modulus) +
                              " in token '" + t + "'");
    sylls.push_back({*idx, e});
  }
  return Word(group, std::move(sylls));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << w.group().graph().name(s.gen);
    if (s.exp != 1) out << '^' << s.exp;
  }
  return out.str();
}

std::string to_string(const NormalForm& nf) { return to_string(nf.word()); }

NormalForm identity(const Group& group) { return reduce(Word(group, {})); }

NormalForm reduce(const Word& w) {
  const Graph& g = w.group().graph();
  const int m = w.group().domain().modulus;
  std::vector<Syllable> acc;
  acc.reserve(w.length());
  for (const auto& s : w.syllables()) insert_syllable(g, m, acc, s);
  canonicalize(g, acc);
  return NormalForm(Word(w.group(), std::move(acc)));
}

bool equal(const Word& w1, const Word& w2) {
  if (!same_group(w1.group(), w2.group()))
    throw std::invalid_argument("equal: words over different groups");
  return reduce(w1).syllables() == reduce(w2).syllables();
}

NormalForm multiply(const Word& w1, const Word& w2) {
  if (!same_group(w1.group(), w2.group()))
    throw std::invalid_argument("multiply: words over different groups");
  std::vector<Syllable> sylls = w1.syllables();
  sylls.insert(sylls.end(), w2.syllables().begin(), w2.syllables().end());
  return reduce(Word(w1.group(), std::move(sylls)));
}

NormalForm invert(const Word& w) {
  std::vector<Syllable> sylls;
  sylls.reserve(w.length());
  const int m = w.group().domain().modulus;
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    sylls.push_back({it->gen, m ? m - it->exp : -it->exp});
  return reduce(Word(w.group(), std::move(sylls)));
}

NormalForm power(const Word& w, std::int64_t k) {
  if (k == 0) return identity(w.group());
  Word base = k > 0 ? w : invert(w).word();
  std::int64_t reps = k > 0 ? k : -k;
  std::vector<Syllable> sylls;
  sylls.reserve(base.length() * reps);
  for (std::int64_t i = 0; i < reps; ++i)
    sylls.insert(sylls.end(), base.syllables().begin(), base.syllables().end());
  return reduce(Word(w.group(), std::move(sylls)));
}

NormalForm conjugate(const Word& by, const Word& w) {
  return multiply(multiply(by, w).word(), invert(by).word());
}

std::vector<Syllable> head(const NormalForm& nf) {
  std::vector<Syllable> out;
  for (int i : head_positions(nf.group().graph(), nf.syllables())) out.push_back(nf.syllables()[i]);
  return out;
}

VertexSet support(const Word& w) {
  NormalForm r = reduce(w);
  std::vector<int> gens;
  for (const auto& s : r.syllables()) gens.push_back(s.gen);
  return VertexSet(std::move(gens));
}

ParabolicSplit parabolic_projection(const Word& w, const VertexSet& lambda) {
  const Graph& g = w.group().graph();
  std::vector<Syllable> rest = reduce(w).syllables();
  std::vector<Syllable> prefix;
  for (;;) {
    int best = -1;
    for (int i : head_positions(g, rest)) {
      if (!lambda.contains(rest[i].gen)) continue;
      if (best < 0 || syllable_less(rest[i], rest[best])) best = i;
    }
    if (best < 0) break;
    prefix.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return {reduce(Word(w.group(), std::move(prefix))), reduce(Word(w.group(), std::move(rest)))};
}

bool in_parabolic(const Word& w, const VertexSet& lambda) {
  return support(w).subset_of(lambda);
}

bool in_parabolic_product(const Word& w, const VertexSet& lambda1, const VertexSet& lambda2) {
  auto split = parabolic_projection(w, lambda1);
  return in_parabolic(split.remainder.word(), lambda2);
}

int compare_canonical(const NormalForm& a, const NormalForm& b) {
  const auto& x = a.syllables();
  const auto& y = b.syllables();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    return syllable_less(x[i], y[i]) ? -1 : 1;
  }
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

}  // namespace raag
