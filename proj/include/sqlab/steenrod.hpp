#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqlab {

inline constexpr int default_degree_cap = 512;

// Resource bounds for rewriting. fuel == 0 means unbounded.
struct Limits {
    int degree_cap = default_degree_cap;
    std::uint64_t fuel = 0;
};

// A composite Sq^{i_1} ... Sq^{i_m} of Steenrod squares, applied right to left.
// Zero exponents are dropped on construction (Sq^0 = 1); the empty sequence is the unit.
class SqMonomial {
public:
    SqMonomial() = default;
    explicit SqMonomial(std::vector<int> exponents);
    SqMonomial(std::initializer_list<int> exponents) : SqMonomial(std::vector<int>(exponents)) {}

    static SqMonomial sq(int i) { return SqMonomial{i}; }

    std::span<const int> exponents() const noexcept { return exps_; }
    std::size_t length() const noexcept { return exps_.size(); }
    bool is_unit() const noexcept { return exps_.empty(); }
    int degree() const noexcept;

    // i_j >= 2 i_{j+1} throughout.
    bool is_admissible() const noexcept;
    // Index j of the leftmost pair with i_j < 2 i_{j+1}, if any.
    std::optional<std::size_t> first_inadmissible_pair() const noexcept;

    // Composition (concatenation); no normalization.
    SqMonomial operator*(const SqMonomial& rhs) const;

    // Prefix without the last square, and the last square. Unit has neither.
    SqMonomial without_last() const;
    int last() const;

    auto operator<=>(const SqMonomial&) const = default;
    bool operator==(const SqMonomial&) const = default;

private:
    std::vector<int> exps_;
};

// Finite F2-linear combination of monomials. Terms are kept in descending
// lexicographic order, which is also the display order.
class SteenrodElement {
public:
    using TermSet = std::set<SqMonomial, std::greater<>>;

    SteenrodElement() = default;
    SteenrodElement(SqMonomial m) { terms_.insert(std::move(m)); }
    SteenrodElement(std::initializer_list<SqMonomial> ms);

    static SteenrodElement zero() { return {}; }
    static SteenrodElement one() { return SteenrodElement(SqMonomial{}); }
    static SteenrodElement sq(int i) { return SteenrodElement(SqMonomial::sq(i)); }

    const TermSet& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(const SqMonomial& m) const { return terms_.contains(m); }

    // Adds m with coefficient 1; a repeated monomial cancels.
    void toggle(const SqMonomial& m);

    bool is_homogeneous() const noexcept;
    // Defined only for nonzero homogeneous elements.
    std::optional<int> degree() const noexcept;
    int max_degree() const noexcept;
    bool is_admissible_form() const noexcept;

    SteenrodElement& operator+=(const SteenrodElement& rhs);
    friend SteenrodElement operator+(SteenrodElement lhs, const SteenrodElement& rhs) { return lhs += rhs; }

    bool operator==(const SteenrodElement&) const = default;

private:
    TermSet terms_;
};

// Bilinear extension of monomial concatenation, without Adem rewriting.
SteenrodElement compose(const SteenrodElement& a, const SteenrodElement& b);

// Admissible normal form via the Adem relations
//   Sq^i Sq^j = sum_{s=0}^{[i/2]} C(j-s-1, i-2s) Sq^{i+j-s} Sq^s,  i < 2j,
// always rewriting the leftmost inadmissible pair.
// Throws DegreeCapExceeded if a term is above the cap, FuelExhausted if
// limits.fuel rewriting steps do not suffice.
SteenrodElement adem_normalize(const SteenrodElement& e, const Limits& limits = {});

// Right-hand side of the Adem relation for Sq^i Sq^j (requires 0 < i < 2j).
SteenrodElement adem_relation(int i, int j);

// Normal form of the product a * b.
SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b, const Limits& limits = {});

// All admissible monomials of degree d in descending lexicographic order.
std::vector<SqMonomial> admissible_basis(int d, const Limits& limits = {});

// Text form: element := term ('+' term)* | '0'; term := '1' | sq+; sq := 'Sq' integer.
// Parsing is literal; no rewriting happens.
SteenrodElement parse_element(std::string_view text);
// Terms in written order, duplicates kept.
std::vector<SqMonomial> parse_terms(std::string_view text);

std::string to_string(const SqMonomial& m);
std::string to_string(const SteenrodElement& e);
std::ostream& operator<<(std::ostream& os, const SqMonomial& m);
std::ostream& operator<<(std::ostream& os, const SteenrodElement& e);

}  // namespace sqlab
