#pragma once

#include "sqlab/steenrod.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sqlab {

struct ModuleClass {
    std::string name;
    int degree = 0;
};

// F2-sum of basis classes, by class index.
using ClassSum = std::set<std::size_t>;

void toggle(ClassSum& sum, std::size_t c);

// Finite graded F2-module with an explicit table for every Sq^i, i >= 1.
// Missing table entries mean Sq^i acts by zero.
class SteenrodModule {
public:
    std::size_t add_class(std::string name, int degree);
    // Sq^i(from) = sum of `to`. Every target must sit in degree(from) + i.
    void set_action(int i, std::size_t from, const ClassSum& to);

    std::size_t size() const noexcept { return classes_.size(); }
    const ModuleClass& at(std::size_t c) const { return classes_.at(c); }
    const std::vector<ModuleClass>& classes() const noexcept { return classes_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::vector<std::size_t> classes_in_degree(int d) const;
    std::vector<int> degrees() const;

    ClassSum apply_square(int i, std::size_t c) const;
    // Nonzero entries Sq^i(c) keyed by i.
    const std::map<int, ClassSum>& actions(std::size_t c) const { return action_.at(c); }

    // One line per class ("class <name> <degree>"), then one line per nonzero
    // action ("Sq<i> <name> = <name> + ..."), in class order then i.
    std::string to_text() const;

private:
    std::vector<ModuleClass> classes_;
    std::vector<std::map<int, ClassSum>> action_;
};

SteenrodModule direct_sum(const SteenrodModule& a, const SteenrodModule& b);

// RP^b_a suspended `shift` times.
struct StuntedProjectiveSpec {
    int a = 1;
    int b = 1;
    int shift = 0;
};

// Classes x^j (named "x<j>"), a <= j <= b, in degree j + shift, with
// Sq^i x^j = C(j, i) x^{i+j} and zero once i + j > b.
SteenrodModule stunted(const StuntedProjectiveSpec& spec);

// A sphere class "s" in degree dim with trivial action.
SteenrodModule sphere(int dim);

// Split model of X(n,k): S^{2n+1} plus the stunted space RP^{2n}_{2n-k+1}
// shifted up by 2n+2, so the top class x^{2n} sits in degree 4n+2. 1 <= k <= 2n.
SteenrodModule make_X(int n, int k);

// Acts monomial by monomial, applying squares right to left.
ClassSum act(const SteenrodModule& m, const SteenrodElement& e, std::size_t c);
ClassSum act(const SteenrodModule& m, const SteenrodElement& e, const ClassSum& y);

std::string to_string(const SteenrodModule& m, const ClassSum& sum);

}  // namespace sqlab
