#include "sqlab/ideal.hpp"

#include "sqlab/errors.hpp"
#include "sqlab/gf2.hpp"

#include <map>
#include <stdexcept>

namespace sqlab {

namespace {

struct DegreeCoordinates {
    std::vector<SqMonomial> basis;
    std::map<SqMonomial, std::size_t> index;

    explicit DegreeCoordinates(int d, const Limits& limits) : basis(admissible_basis(d, limits))
    {
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], i);
    }

    gf2::BitVector vectorize(const SteenrodElement& normal_form) const
    {
        gf2::BitVector v(basis.size());
        for (const auto& m : normal_form.terms())
            v.flip(index.at(m));
        return v;
    }
};

}  // namespace

bool ideal_member(const SteenrodElement& e, int k, const Limits& limits)
{
    if (k < 0)
        throw std::invalid_argument("ideal index k must be non-negative");
    if (e.is_zero())
        return true;
    if (!e.is_homogeneous())
        throw std::invalid_argument("ideal_member needs a homogeneous element, got " + to_string(e));
    const int d = *e.degree();
    if (d > limits.degree_cap)
        throw DegreeCapExceeded(d, limits.degree_cap);

    const DegreeCoordinates coords(d, limits);
    gf2::EchelonSpan span(coords.basis.size());
    for (int j = 0; j <= k && j < 31; ++j) {
        const int gen = 1 << j;
        if (gen > d)
            break;
        for (const auto& m : admissible_basis(d - gen, limits))
            span.insert(coords.vectorize(multiply(SteenrodElement(m), SteenrodElement::sq(gen), limits)));
    }
    return span.contains(coords.vectorize(adem_normalize(e, limits)));
}

int min_ideal_k(int d, const Limits& limits)
{
    if (d <= 0)
        throw std::invalid_argument("min_ideal_k needs a positive degree");
    const auto target = SteenrodElement::sq(d);
    for (int k = 0;; ++k) {
        if (ideal_member(target, k, limits))
            return k;
        if ((1 << k) >= d)
            throw std::logic_error("Sq^" + std::to_string(d) + " missing from L(" + std::to_string(k) + ")");
    }
}

}  // namespace sqlab
