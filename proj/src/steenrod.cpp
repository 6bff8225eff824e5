#include "sqlab/steenrod.hpp"

#include "sqlab/binomial.hpp"
#include "sqlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace sqlab {

SqMonomial::SqMonomial(std::vector<int> exponents)
{
    exps_.reserve(exponents.size());
    for (int e : exponents) {
        if (e < 0)
            throw std::invalid_argument("negative Steenrod square exponent " + std::to_string(e));
        if (e > 0)
            exps_.push_back(e);
    }
}

int SqMonomial::degree() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool SqMonomial::is_admissible() const noexcept
{
    return !first_inadmissible_pair().has_value();
}

std::optional<std::size_t> SqMonomial::first_inadmissible_pair() const noexcept
{
    for (std::size_t j = 0; j + 1 < exps_.size(); ++j) {
        if (exps_[j] < 2 * exps_[j + 1])
            return j;
    }
    return std::nullopt;
}

SqMonomial SqMonomial::operator*(const SqMonomial& rhs) const
{
    SqMonomial out;
    out.exps_.reserve(exps_.size() + rhs.exps_.size());
    out.exps_ = exps_;
    out.exps_.insert(out.exps_.end(), rhs.exps_.begin(), rhs.exps_.end());
    return out;
}

SqMonomial SqMonomial::without_last() const
{
    if (exps_.empty())
        throw std::logic_error("unit monomial has no last square");
    SqMonomial out;
    out.exps_.assign(exps_.begin(), exps_.end() - 1);
    return out;
}

int SqMonomial::last() const
{
    if (exps_.empty())
        throw std::logic_error("unit monomial has no last square");
    return exps_.back();
}

SteenrodElement::SteenrodElement(std::initializer_list<SqMonomial> ms)
{
    for (const auto& m : ms)
        toggle(m);
}

void SteenrodElement::toggle(const SqMonomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

bool SteenrodElement::is_homogeneous() const noexcept
{
    if (terms_.empty())
        return true;
    const int d = terms_.begin()->degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const SqMonomial& m) { return m.degree() == d; });
}

std::optional<int> SteenrodElement::degree() const noexcept
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->degree();
}

int SteenrodElement::max_degree() const noexcept
{
    int d = 0;
    for (const auto& m : terms_)
        d = std::max(d, m.degree());
    return d;
}

bool SteenrodElement::is_admissible_form() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const SqMonomial& m) { return m.is_admissible(); });
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& rhs)
{
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

SteenrodElement compose(const SteenrodElement& a, const SteenrodElement& b)
{
    SteenrodElement out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out.toggle(x * y);
    return out;
}

SteenrodElement adem_relation(int i, int j)
{
    if (i <= 0 || j <= 0 || i >= 2 * j)
        throw std::invalid_argument("Adem relation needs 0 < i < 2j, got i=" + std::to_string(i) +
                                    ", j=" + std::to_string(j));
    SteenrodElement out;
    for (int s = 0; s <= i / 2; ++s) {
        if (choose_mod2(j - s - 1, i - 2 * s))
            out.toggle(SqMonomial{i + j - s, s});
    }
    return out;
}

namespace {

void check_cap(const SqMonomial& m, const Limits& limits)
{
    if (m.degree() > limits.degree_cap)
        throw DegreeCapExceeded(m.degree(), limits.degree_cap);
}

}  // namespace

SteenrodElement adem_normalize(const SteenrodElement& e, const Limits& limits)
{
    // pending holds inadmissible terms still to rewrite, done the admissible ones.
    // Both use F2 set semantics so cancellation happens as early as possible.
    std::set<SqMonomial> pending;
    SteenrodElement done;
    auto route = [&](const SqMonomial& m) {
        if (m.is_admissible()) {
            done.toggle(m);
        } else {
            auto [it, inserted] = pending.insert(m);
            if (!inserted)
                pending.erase(it);
        }
    };
    for (const auto& m : e.terms()) {
        check_cap(m, limits);
        route(m);
    }

    std::uint64_t steps = 0;
    while (!pending.empty()) {
        if (limits.fuel != 0 && ++steps > limits.fuel)
            throw FuelExhausted("Adem rewriting did not terminate within " + std::to_string(limits.fuel) + " steps");
        // Processing order does not affect the result (linearity).
        SqMonomial m = *pending.rbegin();
        pending.erase(std::prev(pending.end()));

        const auto exps = m.exponents();
        const std::size_t j = *m.first_inadmissible_pair();
        const int a = exps[j];
        const int b = exps[j + 1];
        std::vector<int> head(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<int> tail(exps.begin() + static_cast<std::ptrdiff_t>(j) + 2, exps.end());
        for (int s = 0; s <= a / 2; ++s) {
            if (!choose_mod2(b - s - 1, a - 2 * s))
                continue;
            std::vector<int> next = head;
            next.push_back(a + b - s);
            next.push_back(s);
            next.insert(next.end(), tail.begin(), tail.end());
            route(SqMonomial(std::move(next)));
        }
    }
    return done;
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b, const Limits& limits)
{
    return adem_normalize(compose(a, b), limits);
}

namespace {

using BasisMemo = std::map<std::pair<int, int>, std::vector<std::vector<int>>>;

// Admissible sequences of degree d whose first exponent is at most max_first.
const std::vector<std::vector<int>>& admissible_sequences(int d, int max_first, BasisMemo& memo)
{
    max_first = std::min(max_first, d);
    auto key = std::make_pair(d, max_first);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<std::vector<int>> out;
    if (d == 0) {
        out.emplace_back();
    } else {
        for (int i = max_first; i >= 1; --i) {
            for (const auto& rest : admissible_sequences(d - i, i / 2, memo)) {
                std::vector<int> seq;
                seq.reserve(rest.size() + 1);
                seq.push_back(i);
                seq.insert(seq.end(), rest.begin(), rest.end());
                out.push_back(std::move(seq));
            }
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<SqMonomial> admissible_basis(int d, const Limits& limits)
{
    if (d < 0)
        throw std::invalid_argument("negative degree " + std::to_string(d));
    if (d > limits.degree_cap)
        throw DegreeCapExceeded(d, limits.degree_cap);
    BasisMemo memo;
    std::vector<SqMonomial> out;
    for (const auto& seq : admissible_sequences(d, d, memo))
        out.emplace_back(seq);
    return out;
}

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    std::vector<SqMonomial> parse()
    {
        std::vector<SqMonomial> terms;
        skip_ws();
        if (at_end())
            fail("empty expression");
        if (peek() == '0') {
            ++pos_;
            skip_ws();
            if (!at_end())
                fail("'0' must stand alone");
            return terms;
        }
        terms.push_back(term());
        skip_ws();
        while (!at_end()) {
            if (peek() != '+')
                fail("expected '+'");
            ++pos_;
            terms.push_back(term());
            skip_ws();
        }
        return terms;
    }

private:
    SqMonomial term()
    {
        skip_ws();
        if (at_end())
            fail("expected a term");
        if (peek() == '1') {
            ++pos_;
            return {};
        }
        std::vector<int> exps;
        while (true) {
            skip_ws();
            if (at_end() || peek() == '+')
                break;
            exps.push_back(square());
        }
        if (exps.empty())
            fail("expected 'Sq'");
        // Sq0 terms collapse to the unit here.
        return SqMonomial(std::move(exps));
    }

    int square()
    {
        if (text_.substr(pos_, 2) != "Sq")
            fail("expected 'Sq'");
        pos_ += 2;
        skip_ws();
        if (!at_end() && peek() == '^')
            ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an exponent after 'Sq'");
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000)
                fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                         std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<SqMonomial> parse_terms(std::string_view text)
{
    return TermParser(text).parse();
}

SteenrodElement parse_element(std::string_view text)
{
    SteenrodElement out;
    for (const auto& m : parse_terms(text))
        out.toggle(m);
    return out;
}

std::string to_string(const SqMonomial& m)
{
    if (m.is_unit())
        return "1";
    std::string out;
    for (int e : m.exponents()) {
        if (!out.empty())
            out += ' ';
        out += "Sq";
        out += std::to_string(e);
    }
    return out;
}

std::string to_string(const SteenrodElement& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& m : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(m);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SqMonomial& m)
{
    return os << to_string(m);
}

std::ostream& operator<<(std::ostream& os, const SteenrodElement& e)
{
    return os << to_string(e);
}

}  // namespace sqlab
