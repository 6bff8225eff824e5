#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Parity of C(n, k) from Pascal's triangle mod 2.
inline bool pascal_mod2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return false;
    static std::vector<std::vector<bool>> rows{{true}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<bool> row(prev.size() + 1, true);
        for (std::size_t i = 1; i < prev.size(); ++i)
            row[i] = prev[i - 1] != prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

// H^*((RP^inf)^m) = F2[x_1..x_m]. Sq^d is faithful on x_1 ... x_m for d <= m,
// so two elements of degree <= m agree iff their values there agree.
using Monomial = std::vector<int>;
using Poly = std::set<Monomial>;

inline void toggle(Poly& p, const Monomial& m)
{
    auto [it, inserted] = p.insert(m);
    if (!inserted)
        p.erase(it);
}

// Cartan formula with Sq(x) = x + x^2: Sq^i x^a = C(a, i) x^{a+i}.
inline void sq_monomial(int i, const Monomial& m, std::size_t var, Monomial& cur, Poly& out)
{
    if (var == m.size()) {
        if (i == 0)
            toggle(out, cur);
        return;
    }
    for (int take = 0; take <= std::min(i, m[var]); ++take) {
        if (!pascal_mod2(m[var], take))
            continue;
        cur[var] = m[var] + take;
        sq_monomial(i - take, m, var + 1, cur, out);
    }
    cur[var] = m[var];
}

inline Poly sq(int i, const Poly& p)
{
    Poly out;
    for (const auto& m : p) {
        Monomial cur = m;
        sq_monomial(i, m, 0, cur, out);
    }
    return out;
}

// Value of a sum of composites (each listed outermost first) on x_1 ... x_m.
inline Poly evaluate(const std::vector<std::vector<int>>& terms, int m)
{
    Poly out;
    for (const auto& word : terms) {
        Poly p{Monomial(static_cast<std::size_t>(m), 1)};
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            p = sq(*it, p);
        for (const auto& mono : p)
            toggle(out, mono);
    }
    return out;
}

// All sequences of positive integers summing to d.
inline void compositions(int d, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = 1; i <= d; ++i) {
        cur.push_back(i);
        compositions(d - i, cur, out);
        cur.pop_back();
    }
}

// Admissible sequences of degree d by filtering every composition, sorted descending.
inline std::vector<std::vector<int>> admissible_by_enumeration(int d)
{
    std::vector<std::vector<int>> all, cur_out;
    std::vector<int> cur;
    compositions(d, cur, all);
    for (const auto& s : all) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < s.size(); ++j)
            ok = ok && s[j] >= 2 * s[j + 1];
        if (ok)
            cur_out.push_back(s);
    }
    std::sort(cur_out.begin(), cur_out.end(), std::greater<>());
    return cur_out;
}

// Non-trailing zeros by definition: a zero with some 1 to its right.
inline int z_by_definition(const std::string& s)
{
    int z = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '0' && s.find('1', i + 1) != std::string::npos)
            ++z;
    return z;
}

// Minimal len(beta) over arithmetic splits: beta is the low L bits of n
// (leading zeros allowed, L <= len(n) + pad) and |alpha| = n >> L.
inline int min_beta_length(std::uint64_t n, int pad)
{
    auto bits = [](std::uint64_t v, int len) {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = 0; i < len; ++i)
            if ((v >> (len - 1 - i)) & 1u)
                s[static_cast<std::size_t>(i)] = '1';
        return s;
    };
    auto length = [](std::uint64_t v) {
        int l = 0;
        while (v >> l)
            ++l;
        return l;
    };
    for (int L = 0; L <= 70; ++L) {
        const std::uint64_t high = L >= 64 ? 0 : n >> L;
        const std::uint64_t low = L >= 64 ? n : n & ((std::uint64_t{1} << L) - 1);
        const int n_len = length(n);
        if (L > n_len + pad)
            break;
        const std::string beta = bits(low, L);
        if (high < static_cast<std::uint64_t>(z_by_definition(beta)))
            return L;
    }
    return -1;
}

}  // namespace oracle
