#pragma once

#include "sqlab/steenrod.hpp"

namespace sqlab {

// Membership of a homogeneous element in the left ideal
//   L(k) = A{Sq^1, Sq^2, Sq^4, ..., Sq^{2^k}}.
// The degree-d piece is spanned by the normal forms of m * Sq^{2^j} over
// admissible m of degree d - 2^j, 0 <= j <= k; membership is decided by
// Gaussian elimination over F2 in the admissible basis.
bool ideal_member(const SteenrodElement& e, int k, const Limits& limits = {});

// Smallest k with Sq^d in L(k). Always at most ceil(log2 d).
int min_ideal_k(int d, const Limits& limits = {});

}  // namespace sqlab
