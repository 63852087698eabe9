#pragma once

#include "atlas/cohomology.hpp"

namespace atlas {

// tau_g of a degree-n cocycle: the degree n-1 cochain on Z(g) given by
//   tau_g(c)(h_1..h_{n-1}) = sum_j (-1)^j c(h_1..h_j, g, h_{j+1}..h_{n-1}).
struct TransgressionResult {
  Element element = 0;
  Subgroup centralizer;
  Cochain cochain;
  Exponents cls;
};

// Raw formula on any cochain of degree >= 1, without cocycle checks.
Cochain transgression_cochain(const Cochain& c, Element g, const Subgroup& centralizer);

// Degree 4 -> 3.  NotACocycle on the input, InternalInconsistency when the
// output fails the cocycle check.
TransgressionResult transgress(const Cochain& pi, Element g);
// Degree 3 -> 2, same contract.
TransgressionResult transgress3(const Cochain& omega, Element g);

// h -> x h x^{-1} from Z(g) onto Z(x g x^{-1}), as a map between the
// re-indexed subgroup groups.
GroupHom conjugation_hom(const Subgroup& from, const Subgroup& to, Element x);

}  // namespace atlas
