#include "sqlab/secondary.hpp"

#include "sqlab/binomial.hpp"
#include "sqlab/errors.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace sqlab {

namespace {

void require_verified(int n, const Factorization& f, const Limits& limits)
{
    if (f.target_degree != 2 * n + 2)
        throw std::invalid_argument("factorization of Sq" + std::to_string(f.target_degree) +
                                    " does not match S^" + std::to_string(2 * n + 1) + " (needs Sq" +
                                    std::to_string(2 * n + 2) + ")");
    if (!verify_factorization(f, limits))
        throw std::invalid_argument("factorization '" + to_string(f) + "' does not normalize to Sq" +
                                    std::to_string(f.target_degree));
}

IndeterminacyVerdict check_vanishing(int n, int k, const Factorization& f)
{
    const SteenrodModule x = make_X(n, k);
    const int top_degree = 4 * n + 2;
    IndeterminacyVerdict verdict{k, true, std::nullopt};
    for (std::size_t i = 0; i < f.terms.size() && verdict.zero; ++i) {
        const auto& term = f.terms[i];
        for (std::size_t c : x.classes_in_degree(2 * n + term.right_square)) {
            const ClassSum image = act(x, term.coefficient, c);
            const bool hits_top = std::any_of(image.begin(), image.end(),
                                              [&](std::size_t t) { return x.at(t).degree == top_degree; });
            if (hits_top) {
                verdict.zero = false;
                verdict.witness = Witness{i, term.coefficient, term.right_square, x.at(c).name, x.at(c).degree};
                break;
            }
        }
    }
    return verdict;
}

}  // namespace

IndeterminacyVerdict indeterminacy_zero(int n, int k, const Factorization& f, const Limits& limits)
{
    if (n < 1 || k < 1 || k > 2 * n)
        throw std::invalid_argument("indeterminacy check needs 1 <= k <= 2n, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
    require_verified(n, f, limits);
    return check_vanishing(n, k, f);
}

BoundReport lower_bound(int n, const Factorization& f, unsigned workers, const Limits& limits)
{
    if (n < 1)
        throw std::invalid_argument("lower_bound needs n >= 1");
    require_verified(n, f, limits);

    BoundReport report;
    report.sphere_dim = 2 * n + 1;
    report.relation = f;
    report.relation_text = to_string(f);
    report.verdicts.resize(static_cast<std::size_t>(2 * n));

    if (workers <= 1) {
        for (int k = 1; k <= 2 * n; ++k)
            report.verdicts[static_cast<std::size_t>(k - 1)] = check_vanishing(n, k, f);
    } else {
        // Strided partition; each slot is written by exactly one task.
        std::vector<std::future<void>> tasks;
        for (unsigned w = 0; w < workers; ++w) {
            tasks.push_back(std::async(std::launch::async, [&, w] {
                for (int k = 1 + static_cast<int>(w); k <= 2 * n; k += static_cast<int>(workers))
                    report.verdicts[static_cast<std::size_t>(k - 1)] = check_vanishing(n, k, f);
            }));
        }
        for (auto& t : tasks)
            t.get();
    }

    for (const auto& v : report.verdicts)
        if (v.zero)
            report.max_vanishing_k = std::max(report.max_vanishing_k, v.k);
    report.lower_bound = report.max_vanishing_k + 1;
    report.contiguous = std::all_of(report.verdicts.begin(), report.verdicts.end(), [&](const auto& v) {
        return v.k > report.max_vanishing_k || v.zero;
    });
    return report;
}

namespace {

void check_family_degree(int degree, const Limits& limits)
{
    if (degree > limits.degree_cap)
        throw DegreeCapExceeded(degree, limits.degree_cap);
}

}  // namespace

Factorization family_case1(int t, const Limits& limits)
{
    if (t < 1 || t > 20)
        throw std::invalid_argument("family parameter t must be in 1..20");
    const int p = 1 << t;
    const int d = 2 * p + p;
    check_family_degree(d, limits);
    std::vector<SqMonomial> terms{SqMonomial{p, 2 * p}};
    for (int s = 1; s <= p / 2; ++s)
        if (choose_mod2(2 * p - s - 1, p - 2 * s))
            terms.push_back(SqMonomial{d - s, s});
    return factor_by_right_square(std::span<const SqMonomial>(terms), "case1(t=" + std::to_string(t) + ")", limits);
}

Factorization family_case2(int t, const Limits& limits)
{
    if (t < 1 || t > 20)
        throw std::invalid_argument("family parameter t must be in 1..20");
    const int p = 1 << t;
    const int d = 2 + 2 * p;
    check_family_degree(d, limits);
    std::vector<SqMonomial> terms{SqMonomial{p, 2 + p}};
    for (int s = 1; s <= p / 2; ++s)
        if (choose_mod2(p + 1 - s, p - 2 * s))
            terms.push_back(SqMonomial{d - s, s});
    return factor_by_right_square(std::span<const SqMonomial>(terms), "case2(t=" + std::to_string(t) + ")", limits);
}

const std::vector<CatalogRelation>& relation_catalog()
{
    static const std::vector<CatalogRelation> catalog{
        {"sq6", "Sq6 = Sq2 Sq4 + Sq5 Sq1", "Sq2 Sq4 + Sq5 Sq1", 5, 3},
        {"sq10", "Sq10 = Sq4(Sq2 Sq4 + Sq5 Sq1) + Sq8 Sq2", "Sq4 Sq2 Sq4 + Sq4 Sq5 Sq1 + Sq8 Sq2", 9, 7},
        {"sq18", "Sq18 = Sq8[Sq4(Sq2 Sq4 + Sq5 Sq1) + Sq8 Sq2] + Sq16 Sq2 + Sq15 Sq3 + Sq14 Sq4",
         "Sq8 Sq4 Sq2 Sq4 + Sq8 Sq4 Sq5 Sq1 + Sq8 Sq8 Sq2 + Sq16 Sq2 + Sq15 Sq3 + Sq14 Sq4", 17, 15},
        {"sq12", "Sq12 = Sq4 Sq8 + Sq11 Sq1 + Sq10 Sq2", "Sq4 Sq8 + Sq11 Sq1 + Sq10 Sq2", 11, 5},
        {"sq14", "Sq14 = Sq6 Sq8 + Sq13 Sq1 + Sq11 Sq3", "Sq6 Sq8 + Sq13 Sq1 + Sq11 Sq3", 13, 7},
        {"sq10-short", "Sq10 = Sq2 Sq8 + Sq9 Sq1", "Sq2 Sq8 + Sq9 Sq1", 9, std::nullopt},
    };
    return catalog;
}

const CatalogRelation* find_relation(const std::string& name)
{
    const auto& catalog = relation_catalog();
    // Table rows may also be addressed by position 1..5.
    if (name.size() == 1 && name[0] >= '1' && name[0] <= '5')
        return &catalog[static_cast<std::size_t>(name[0] - '1')];
    for (const auto& r : catalog)
        if (r.name == name)
            return &r;
    return nullptr;
}

const CatalogRelation* relation_for_sphere(int sphere_dim)
{
    for (const auto& r : relation_catalog())
        if (r.sphere_dim == sphere_dim && r.table_bound)
            return &r;
    return nullptr;
}

Factorization to_factorization(const CatalogRelation& r, const Limits& limits)
{
    return factor_by_right_square(r.expression, r.name, limits);
}

TheoremOneReport theorem_one_bounds(int t, unsigned workers, const Limits& limits)
{
    TheoremOneReport out;
    out.t = t;
    out.required = (1 << t) + 1;
    const auto f1 = family_case1(t, limits);
    const auto f2 = family_case2(t, limits);
    out.part1 = lower_bound(f1.target_degree / 2 - 1, f1, workers, limits);
    out.part2 = lower_bound(f2.target_degree / 2 - 1, f2, workers, limits);
    return out;
}

}  // namespace sqlab
