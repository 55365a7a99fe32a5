#pragma once

#include <utility>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/word.hpp"

namespace raag {

// Servatius description of a centralizer:
//   C(g) = conjugator * (<factors[0]> + ... + <factors[k-1]> + <link_part>) * conjugator^-1
// with one primitive root per irreducible join factor of the cyclic support.
// `whole_group` flags the identity input.
struct CentralizerDescription {
  bool whole_group = false;
  NormalForm conjugator;
  std::vector<NormalForm> factors;
  VertexSet link_part;
};

// Maximal root: w = root^power with power maximal. Requires a non-trivial
// word over an infinite exponent domain.
std::pair<NormalForm, int> primitive_root(const Word& w);

CentralizerDescription centralizer(const Word& w);

bool commutes(const Word& w1, const Word& w2);

}  // namespace raag
