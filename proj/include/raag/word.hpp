#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// Exponent range of syllables: nonzero integers, or nonzero residues mod ell.
struct ExponentDomain {
  int modulus = 0;  // 0 = infinite
  static ExponentDomain infinite() { return {0}; }
  static ExponentDomain modular(int ell) {
    if (ell < 2) throw std::invalid_argument("modular exponent domain needs ell >= 2");
    return {ell};
  }
  bool is_modular() const { return modulus != 0; }
  bool operator==(const ExponentDomain&) const = default;
};

// A graph together with an exponent domain: the group all words live in.
// Cheap to copy; the graph is shared and immutable.
class Group {
 public:
  Group() = default;
  Group(Graph graph, ExponentDomain domain)
      : graph_(std::make_shared<const Graph>(std::move(graph))), domain_(domain) {}

  const Graph& graph() const { return *graph_; }
  const ExponentDomain& domain() const { return domain_; }
  bool valid() const { return graph_ != nullptr; }

  friend bool same_group(const Group& a, const Group& b) {
    if (a.graph_ == b.graph_) return a.domain_ == b.domain_;
    if (!a.graph_ || !b.graph_) return false;
    return a.domain_ == b.domain_ && a.graph_->same_structure(*b.graph_);
  }

 private:
  std::shared_ptr<const Graph> graph_;
  ExponentDomain domain_;
};

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;
  bool operator==(const Syllable&) const = default;
};

// Total order on syllables: generator, then exponent magnitude, positive
// before negative (a < a^-1 < a^2 < a^-2).
bool syllable_less(const Syllable& a, const Syllable& b);

class Word {
 public:
  Word() = default;
  Word(Group group, std::vector<Syllable> syllables);  // validates and normalizes

  const Group& group() const { return group_; }
  const std::vector<Syllable>& syllables() const { return sylls_; }
  int length() const { return static_cast<int>(sylls_.size()); }
  bool empty() const { return sylls_.empty(); }

 private:
  Group group_;
  std::vector<Syllable> sylls_;
};

// Graphically reduced word in canonical order; the hashable identity of a
// group element. Only produced by reduce() and friends.
class NormalForm {
 public:
  NormalForm() = default;
  const Word& word() const { return word_; }
  const Group& group() const { return word_.group(); }
  const std::vector<Syllable>& syllables() const { return word_.syllables(); }
  int length() const { return word_.length(); }
  bool is_identity() const { return word_.empty(); }
  bool operator==(const NormalForm& other) const {
    return syllables() == other.syllables() && same_group(group(), other.group());
  }
  bool operator!=(const NormalForm& other) const { return !(*this == other); }

 private:
  explicit NormalForm(Word w) : word_(std::move(w)) {}
  Word word_;
  friend NormalForm reduce(const Word&);
};

// Word syntax: whitespace-separated tokens `name` or `name^k`; "1" or the
// empty string denote the identity.
Word parse_word(const std::string& text, const Group& group);
std::string to_string(const Word& w);
std::string to_string(const NormalForm& nf);

NormalForm identity(const Group& group);
NormalForm reduce(const Word& w);
bool equal(const Word& w1, const Word& w2);
NormalForm multiply(const Word& w1, const Word& w2);
NormalForm invert(const Word& w);
NormalForm power(const Word& w, std::int64_t k);
NormalForm conjugate(const Word& by, const Word& w);  // by * w * by^-1

// Syllables shufflable to the front, in position order.
std::vector<Syllable> head(const NormalForm& nf);

VertexSet support(const Word& w);

struct ParabolicSplit {
  NormalForm prefix;     // maximal prefix in <lambda>
  NormalForm remainder;  // prefix^-1 * w
};
ParabolicSplit parabolic_projection(const Word& w, const VertexSet& lambda);
bool in_parabolic(const Word& w, const VertexSet& lambda);
bool in_parabolic_product(const Word& w, const VertexSet& lambda1, const VertexSet& lambda2);

// Lexicographic comparison of canonical forms (shorter prefix first).
int compare_canonical(const NormalForm& a, const NormalForm& b);

}  // namespace raag
