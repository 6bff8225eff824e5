#pragma once

#include "sqlab/factorization.hpp"
#include "sqlab/module.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqlab {

// Where the vanishing check fails: a_term applied to a class of degree
// 2n + t_term reaches the top class of X(n,k).
struct Witness {
    std::size_t term = 0;
    SteenrodElement coefficient;
    int right_square = 0;
    std::string class_name;
    int class_degree = 0;
};

struct IndeterminacyVerdict {
    int k = 0;
    bool zero = false;
    std::optional<Witness> witness;  // present exactly when !zero
};

// The indeterminacy sum_i a_i H^{2n+t_i}(X(n,k)) inside H^{4n+2}: zero iff
// every a_i kills every class of degree 2n + t_i in the top degree.
// f must be a verified factorization of Sq^{2n+2}; throws std::invalid_argument otherwise.
IndeterminacyVerdict indeterminacy_zero(int n, int k, const Factorization& f, const Limits& limits = {});

struct BoundReport {
    int sphere_dim = 0;
    Factorization relation;
    std::string relation_text;
    std::vector<IndeterminacyVerdict> verdicts;  // k = 1 .. 2n
    int max_vanishing_k = 0;
    int lower_bound = 1;
    // Vanishing holds for every k <= max_vanishing_k.
    bool contiguous = true;
};

// Scans k = 1 .. 2n. Vanishing at k makes lambda(n,k) essential, which rules
// out a homotopy at k and at every smaller k, so the bound is max k + 1.
// Verdicts are independent; `workers` > 1 evaluates them concurrently.
BoundReport lower_bound(int n, const Factorization& f, unsigned workers = 1, const Limits& limits = {});

// Sq^{2^{t+1}+2^t} = Sq^{2^t} Sq^{2^{t+1}} + sum_{s=1}^{2^{t-1}} C(2^{t+1}-s-1, 2^t-2s) Sq^{3*2^t-s} Sq^s
Factorization family_case1(int t, const Limits& limits = {});
// Sq^{2+2^{t+1}} = Sq^{2^t} Sq^{2+2^t} + sum_{s=1}^{2^{t-1}} C(2^t+1-s, 2^t-2s) Sq^{2+2^{t+1}-s} Sq^s
Factorization family_case2(int t, const Limits& limits = {});

struct CatalogRelation {
    std::string name;
    std::string display;     // as written, brackets allowed
    std::string expression;  // expanded, in the element grammar
    int sphere_dim = 0;
    std::optional<int> table_bound;  // the published loop bound when this is a table row
};

// Named relations: the five table rows (sq6, sq10, sq18, sq12, sq14) in table
// order, followed by the short factorization sq10-short = Sq2 Sq8 + Sq9 Sq1.
const std::vector<CatalogRelation>& relation_catalog();
const CatalogRelation* find_relation(const std::string& name);
const CatalogRelation* relation_for_sphere(int sphere_dim);
Factorization to_factorization(const CatalogRelation& r, const Limits& limits = {});

struct TheoremOneReport {
    int t = 0;
    int required = 0;  // 2^t + 1
    BoundReport part1;  // S^{2^{t+1}+2^t-1}, family_case1
    BoundReport part2;  // S^{2^{t+1}+1}, family_case2
};

TheoremOneReport theorem_one_bounds(int t, unsigned workers = 1, const Limits& limits = {});

}  // namespace sqlab
