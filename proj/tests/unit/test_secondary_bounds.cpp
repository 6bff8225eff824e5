#include "oracles.hpp"

#include "sqlab/dyadic.hpp"
#include "sqlab/secondary.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sqlab;

namespace {

Factorization catalog(const char* name)
{
    const auto* r = find_relation(name);
    REQUIRE(r != nullptr);
    return to_factorization(*r);
}

// Vanishing read straight off Sq^i x^j = C(j,i) x^{i+j}: the class of degree
// 2n + t is x^{t-2} (the sphere only in degree 2n+1, where every positive
// operation dies), and it must not reach x^{2n}.
bool vanishing_oracle(int n, int k, const Factorization& f)
{
    for (const auto& term : f.terms) {
        const int j = term.right_square - 2;
        if (j < 2 * n - k + 1 || j > 2 * n)
            continue;
        int hits = 0;
        for (const auto& m : term.coefficient.terms()) {
            int power = j;
            bool alive = true;
            const auto e = m.exponents();
            for (auto it = e.rbegin(); it != e.rend() && alive; ++it) {
                alive = oracle::pascal_mod2(power, *it);
                power += *it;
            }
            if (alive && power == 2 * n)
                ++hits;
        }
        if (hits % 2 == 1)
            return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("secondary_bounds")
{
    TEST_CASE("indeterminacy on X(4,k) and X(8,14)")
    {
        const auto sq10 = factor_by_right_square("Sq4 Sq2 Sq4 + Sq4 Sq5 Sq1 + Sq8 Sq2");
        CHECK(indeterminacy_zero(4, 6, sq10).zero);
        const auto v7 = indeterminacy_zero(4, 7, sq10);
        CHECK_FALSE(v7.zero);
        REQUIRE(v7.witness.has_value());
        CHECK(v7.witness->coefficient == parse_element("Sq4 Sq2"));
        CHECK(v7.witness->right_square == 4);
        CHECK(v7.witness->class_degree == 12);
        CHECK(indeterminacy_zero(8, 14, catalog("sq18")).zero);
        CHECK_FALSE(indeterminacy_zero(8, 15, catalog("sq18")).zero);
    }

    TEST_CASE("table bounds")
    {
        struct Row {
            const char* name;
            int sphere;
            int bound;
        };
        for (const Row& row : {Row{"sq6", 5, 3}, Row{"sq10", 9, 7}, Row{"sq18", 17, 15}, Row{"sq12", 11, 5},
                               Row{"sq14", 13, 7}}) {
            CAPTURE(row.name);
            const auto report = lower_bound((row.sphere - 1) / 2, catalog(row.name));
            CHECK(report.lower_bound == row.bound);
            CHECK(report.contiguous);
            CHECK(report.lower_bound == loop_bound(row.sphere));
            const auto* r = find_relation(row.name);
            CHECK(r->sphere_dim == row.sphere);
            CHECK(r->table_bound == row.bound);
        }
        CHECK(lower_bound(4, catalog("sq10-short")).lower_bound == 3);
        CHECK(find_relation("3") == find_relation("sq18"));
        CHECK(find_relation("nope") == nullptr);
        CHECK(relation_for_sphere(13) == find_relation("sq14"));
    }

    TEST_CASE("written relations as catalogued")
    {
        CHECK(lower_bound(2, factor_by_right_square("Sq2 Sq4 + Sq5 Sq1")).lower_bound == 3);
        CHECK(lower_bound(5, factor_by_right_square("Sq4 Sq8 + Sq11 Sq1 + Sq10 Sq2")).lower_bound == 5);
        CHECK(lower_bound(6, factor_by_right_square("Sq6 Sq8 + Sq13 Sq1 + Sq11 Sq3")).lower_bound == 7);
    }

    TEST_CASE("every verdict agrees with the binomial oracle")
    {
        std::vector<Factorization> fs;
        for (const auto& r : relation_catalog())
            fs.push_back(to_factorization(r));
        for (int t = 1; t <= 3; ++t) {
            fs.push_back(family_case1(t));
            fs.push_back(family_case2(t));
        }
        for (const auto& f : fs) {
            const int n = (f.target_degree - 2) / 2;
            const auto report = lower_bound(n, f);
            REQUIRE(report.verdicts.size() == static_cast<std::size_t>(2 * n));
            for (const auto& v : report.verdicts) {
                CAPTURE(f.label);
                CAPTURE(v.k);
                CHECK(v.zero == vanishing_oracle(n, v.k, f));
                CHECK(v.witness.has_value() == !v.zero);
            }
        }
    }

    TEST_CASE("families")
    {
        CHECK(adem_normalize(expand(family_case1(1))) == adem_normalize(expand(catalog("sq6"))));
        CHECK(adem_normalize(expand(family_case1(2))) == adem_normalize(expand(catalog("sq12"))));
        CHECK(to_string(family_case1(1)) == "Sq2 * Sq4 + Sq5 * Sq1");
        CHECK(to_string(family_case1(2)) == "Sq4 * Sq8 + Sq11 * Sq1 + Sq10 * Sq2");
        CHECK(to_string(family_case2(1)) == to_string(family_case1(1)));
        for (int t = 1; t <= 4; ++t) {
            CAPTURE(t);
            const auto c1 = family_case1(t);
            const auto c2 = family_case2(t);
            CHECK(c1.target_degree == (2 << t) + (1 << t));
            CHECK(c2.target_degree == 2 + (2 << t));
            CHECK(verify_factorization(c1));
            CHECK(verify_factorization(c2));
            CHECK(c1.terms.front().right_square == 2 << t);
            CHECK(c2.terms.front().right_square == 2 + (1 << t));
            for (std::size_t i = 1; i < c2.terms.size(); ++i)
                CHECK(c2.terms[i].right_square <= 1 << (t - 1));
        }
    }

    TEST_CASE("both family bounds reach 2^t + 1")
    {
        const auto t1 = theorem_one_bounds(1);
        CHECK(t1.required == 3);
        CHECK(t1.part1.sphere_dim == 5);
        CHECK(t1.part2.sphere_dim == 5);
        CHECK(t1.part1.lower_bound == 3);
        CHECK(t1.part2.lower_bound == 3);
        const auto t2 = theorem_one_bounds(2);
        CHECK(t2.part1.sphere_dim == 11);
        CHECK(t2.part2.sphere_dim == 9);
        CHECK(t2.part1.lower_bound >= 5);
        CHECK(t2.part2.lower_bound >= 5);
        const auto t3 = theorem_one_bounds(3);
        CHECK(t3.part1.lower_bound >= 9);
        CHECK(t3.part2.lower_bound >= 9);
        CHECK_THROWS_AS(theorem_one_bounds(0), std::invalid_argument);
    }

    TEST_CASE("parallel scan matches the serial scan")
    {
        const auto f = catalog("sq18");
        const auto serial = lower_bound(8, f, 1);
        for (unsigned w : {2u, 3u, 8u, 40u}) {
            const auto par = lower_bound(8, f, w);
            CHECK(par.lower_bound == serial.lower_bound);
            REQUIRE(par.verdicts.size() == serial.verdicts.size());
            for (std::size_t i = 0; i < par.verdicts.size(); ++i) {
                CHECK(par.verdicts[i].k == serial.verdicts[i].k);
                CHECK(par.verdicts[i].zero == serial.verdicts[i].zero);
            }
        }
    }

    TEST_CASE("rejected inputs")
    {
        CHECK_THROWS_AS(lower_bound(3, catalog("sq10")), std::invalid_argument);
        CHECK_THROWS_AS(lower_bound(4, factor_by_right_square("Sq2 Sq8")), std::invalid_argument);
        CHECK_THROWS_AS(indeterminacy_zero(4, 9, catalog("sq10")), std::invalid_argument);
        CHECK_THROWS_AS(indeterminacy_zero(4, 0, catalog("sq10")), std::invalid_argument);
    }
}
