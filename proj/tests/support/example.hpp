#pragma once
// The running example: the cyclic quiver on three vertices with all paths of
// length 5 set to zero, and the modules built from it.

#include "fdrep/homology.hpp"

namespace ex {

using namespace fdrep;

inline const Algebra& algebra() {
  static const Algebra a(cyclic_nakayama(3, 5));
  return a;
}

inline Module P(int i) { return projective(algebra(), i - 1); }
inline Module I(int i) { return injective(algebra(), i - 1); }
inline Module S(int i) { return simple(algebra(), i - 1); }
inline Module Prad(int i, int k) {
  return radical_quotient(P(i), k).module.with_label("P(" + std::to_string(i) + ")/rad^" + std::to_string(k));
}

inline Module M1() { return direct_sum({P(1), P(2), P(3), S(1), Prad(3, 2)}); }
inline Module M2() { return direct_sum({P(1), P(2), P(3), S(1), Prad(1, 2)}); }

/// 0 -> P3/rad^2 -> P1/soc P1 -> P1/rad^2 -> 0
inline ShortExactSequence nonsplit() {
  Module p = P(1);
  auto q4 = radical_quotient(p, 4);
  auto q2 = radical_quotient(p, 2);
  Morphism g = descend_through_epi(q2.projection, q4.projection);
  SubModule k = kernel(g);
  return {k.inclusion, Morphism::trusted(q4.module, q2.module, g.maps())};
}

}  // namespace ex
