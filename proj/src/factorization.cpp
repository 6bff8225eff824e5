#include "sqlab/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqlab {

Factorization factor_by_right_square(std::span<const SqMonomial> expression, std::string label, const Limits& limits)
{
    if (expression.empty())
        throw std::invalid_argument("empty factorization expression");
    Factorization f;
    f.label = std::move(label);
    f.target_degree = expression.front().degree();
    std::vector<SteenrodElement> raw;
    for (const auto& m : expression) {
        if (m.is_unit())
            throw std::invalid_argument("factorization term '1' has no right square");
        if (m.degree() != f.target_degree)
            throw std::invalid_argument("factorization term " + to_string(m) + " has degree " +
                                        std::to_string(m.degree()) + ", expected " +
                                        std::to_string(f.target_degree));
        const int t = m.last();
        if (t == f.target_degree)
            throw std::invalid_argument("factorization term " + to_string(m) + " is the target square itself");
        auto it = std::find_if(f.terms.begin(), f.terms.end(), [t](const FactorTerm& ft) { return ft.right_square == t; });
        if (it == f.terms.end()) {
            f.terms.push_back({{}, t});
            raw.emplace_back();
            it = std::prev(f.terms.end());
        }
        raw[static_cast<std::size_t>(it - f.terms.begin())].toggle(m.without_last());
    }
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        f.terms[i].coefficient = adem_normalize(raw[i], limits);
    return f;
}

Factorization factor_by_right_square(std::string_view expression_text, std::string label, const Limits& limits)
{
    const auto terms = parse_terms(expression_text);
    return factor_by_right_square(std::span<const SqMonomial>(terms), std::move(label), limits);
}

SteenrodElement expand(const Factorization& f)
{
    SteenrodElement sum;
    for (const auto& term : f.terms)
        sum += compose(term.coefficient, SteenrodElement::sq(term.right_square));
    return sum;
}

bool verify_factorization(const Factorization& f, const Limits& limits)
{
    if (f.target_degree <= 0)
        throw std::invalid_argument("factorization target degree must be positive");
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& term = f.terms[i];
        const int want = f.target_degree - term.right_square;
        const bool ok = term.right_square > 0 && term.right_square != f.target_degree &&
                        term.coefficient.is_homogeneous() &&
                        (term.coefficient.is_zero() || term.coefficient.degree() == want);
        if (!ok)
            throw std::invalid_argument("factorization term " + std::to_string(i) + " (" +
                                        to_string(term.coefficient) + ") * Sq" + std::to_string(term.right_square) +
                                        " is not homogeneous of degree " + std::to_string(f.target_degree));
    }
    return adem_normalize(expand(f), limits) == SteenrodElement::sq(f.target_degree);
}

std::string to_string(const Factorization& f)
{
    std::string out;
    for (const auto& term : f.terms) {
        if (!out.empty())
            out += " + ";
        const bool wrap = term.coefficient.size() > 1;
        out += wrap ? "(" + to_string(term.coefficient) + ")" : to_string(term.coefficient);
        out += " * Sq" + std::to_string(term.right_square);
    }
    return out.empty() ? "0" : out;
}

}  // namespace sqlab
