#pragma once

#include <optional>

#include "raag/word.hpp"

namespace raag {

// Cyclically graphically reduced core with a conjugating element: the input
// equals conjugator * core * conjugator^-1. The conjugator is kept short
// (head/tail merge pairs are resolved by the cheaper rotation), so a word
// that is already cyclically reduced keeps an empty conjugator. Conjugacy of
// cores is decided up to rotations by conjugate_test.
struct CyclicNormalForm {
  NormalForm core;
  NormalForm conjugator;
};

CyclicNormalForm cyclic_reduce(const Word& w);

// Conjugacy test; on success returns x with w1 = x * w2 * x^-1.
std::optional<NormalForm> conjugate_test(const Word& w1, const Word& w2);

VertexSet cyclic_support(const Word& w);

}  // namespace raag
