#pragma once

#include "sqlab/steenrod.hpp"

#include <span>
#include <string>
#include <vector>

namespace sqlab {

// One summand a * Sq^t of a decomposition of Sq^d.
struct FactorTerm {
    SteenrodElement coefficient;
    int right_square = 0;
};

// Sq^d = sum_i a_i Sq^{t_i} with every t_i != d.
struct Factorization {
    int target_degree = 0;
    std::vector<FactorTerm> terms;
    std::string label;
};

// Splits every monomial of a written expression into (prefix, last square) and
// sums prefixes that share a last square. Coefficients are returned in normal
// form; groups appear in order of first occurrence. Throws if a monomial is the
// unit, has the wrong degree, or is Sq^d itself.
Factorization factor_by_right_square(std::span<const SqMonomial> expression, std::string label = {},
                                     const Limits& limits = {});
Factorization factor_by_right_square(std::string_view expression_text, std::string label = {},
                                     const Limits& limits = {});

// Sum of a_i * Sq^{t_i}, unnormalized.
SteenrodElement expand(const Factorization& f);

// True iff the normal form of sum a_i Sq^{t_i} equals Sq^d. Throws
// std::invalid_argument naming the first term whose coefficient is not
// homogeneous of degree d - t_i.
bool verify_factorization(const Factorization& f, const Limits& limits = {});

// "a1 * Sq^t1 + a2 * Sq^t2 ..." using the element grammar for each a_i.
std::string to_string(const Factorization& f);

}  // namespace sqlab
