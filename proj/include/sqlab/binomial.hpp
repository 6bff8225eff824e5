#pragma once

#include <cstdint>

namespace sqlab {

// Parity of C(n, k) by Lucas: the product of digit binomials C(n_i, k_i) over
// the base-2 expansions. Zero when k < 0, n < 0 or k > n.
bool choose_mod2(std::int64_t n, std::int64_t k);

// Parity of the pair coefficient (a, b) = (a+b)! / (a! b!).
// Negative arguments give 0, which is how the Nishida sums are truncated.
bool binom_pair_mod2(std::int64_t a, std::int64_t b);

}  // namespace sqlab
