#include "sqlab/module.hpp"

#include "sqlab/binomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sqlab {

void toggle(ClassSum& sum, std::size_t c)
{
    auto [it, inserted] = sum.insert(c);
    if (!inserted)
        sum.erase(it);
}

std::size_t SteenrodModule::add_class(std::string name, int degree)
{
    if (find(name))
        throw std::invalid_argument("duplicate module class name " + name);
    classes_.push_back({std::move(name), degree});
    action_.emplace_back();
    return classes_.size() - 1;
}

void SteenrodModule::set_action(int i, std::size_t from, const ClassSum& to)
{
    if (i < 1)
        throw std::invalid_argument("action table only holds Sq^i with i >= 1");
    if (from >= classes_.size())
        throw std::out_of_range("module class index " + std::to_string(from) + " out of range");
    for (std::size_t c : to) {
        if (c >= classes_.size())
            throw std::out_of_range("module class index " + std::to_string(c) + " out of range");
        if (classes_[c].degree != classes_[from].degree + i)
            throw std::invalid_argument("Sq" + std::to_string(i) + " " + classes_[from].name + " cannot hit " +
                                        classes_[c].name + ": wrong degree");
    }
    if (to.empty())
        action_[from].erase(i);
    else
        action_[from][i] = to;
}

std::optional<std::size_t> SteenrodModule::find(const std::string& name) const
{
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].name == name)
            return c;
    return std::nullopt;
}

std::vector<std::size_t> SteenrodModule::classes_in_degree(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].degree == d)
            out.push_back(c);
    return out;
}

std::vector<int> SteenrodModule::degrees() const
{
    std::vector<int> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_)
        out.push_back(c.degree);
    return out;
}

ClassSum SteenrodModule::apply_square(int i, std::size_t c) const
{
    if (c >= classes_.size())
        throw std::out_of_range("module class index " + std::to_string(c) + " out of range");
    if (i == 0)
        return {c};
    const auto& row = action_[c];
    if (auto it = row.find(i); it != row.end())
        return it->second;
    return {};
}

std::string SteenrodModule::to_text() const
{
    std::ostringstream os;
    for (const auto& c : classes_)
        os << "class " << c.name << ' ' << c.degree << '\n';
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (const auto& [i, targets] : action_[c])
            os << "Sq" << i << ' ' << classes_[c].name << " = " << to_string(*this, targets) << '\n';
    return os.str();
}

std::string to_string(const SteenrodModule& m, const ClassSum& sum)
{
    if (sum.empty())
        return "0";
    std::string out;
    for (std::size_t c : sum) {
        if (!out.empty())
            out += " + ";
        out += m.at(c).name;
    }
    return out;
}

SteenrodModule direct_sum(const SteenrodModule& a, const SteenrodModule& b)
{
    SteenrodModule out;
    for (const auto& c : a.classes())
        out.add_class(c.name, c.degree);
    const std::size_t offset = a.size();
    for (const auto& c : b.classes())
        out.add_class(c.name, c.degree);
    auto copy_actions = [&out](const SteenrodModule& src, std::size_t off) {
        for (std::size_t c = 0; c < src.size(); ++c) {
            for (const auto& [i, targets] : src.actions(c)) {
                ClassSum shifted;
                for (std::size_t x : targets)
                    shifted.insert(x + off);
                out.set_action(i, c + off, shifted);
            }
        }
    };
    copy_actions(a, 0);
    copy_actions(b, offset);
    return out;
}

SteenrodModule stunted(const StuntedProjectiveSpec& spec)
{
    if (spec.a < 1)
        throw std::invalid_argument("stunted projective space needs a >= 1");
    if (spec.b < spec.a)
        throw std::invalid_argument("stunted projective space needs b >= a, got a=" + std::to_string(spec.a) +
                                    ", b=" + std::to_string(spec.b));
    if (spec.shift < 0)
        throw std::invalid_argument("suspension shift must be non-negative");
    SteenrodModule m;
    for (int j = spec.a; j <= spec.b; ++j)
        m.add_class("x" + std::to_string(j), j + spec.shift);
    for (int j = spec.a; j <= spec.b; ++j) {
        for (int i = 1; i + j <= spec.b; ++i) {
            if (choose_mod2(j, i))
                m.set_action(i, static_cast<std::size_t>(j - spec.a), {static_cast<std::size_t>(i + j - spec.a)});
        }
    }
    return m;
}

SteenrodModule sphere(int dim)
{
    SteenrodModule m;
    m.add_class("s", dim);
    return m;
}

SteenrodModule make_X(int n, int k)
{
    if (n < 1)
        throw std::invalid_argument("make_X needs n >= 1");
    if (k < 1 || k > 2 * n)
        throw std::invalid_argument("make_X needs 1 <= k <= 2n, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
    return direct_sum(sphere(2 * n + 1), stunted({2 * n - k + 1, 2 * n, 2 * n + 2}));
}

ClassSum act(const SteenrodModule& m, const SteenrodElement& e, const ClassSum& y)
{
    ClassSum out;
    for (const auto& mono : e.terms()) {
        ClassSum current = y;
        const auto exps = mono.exponents();
        for (auto it = exps.rbegin(); it != exps.rend() && !current.empty(); ++it) {
            ClassSum next;
            for (std::size_t c : current)
                for (std::size_t t : m.apply_square(*it, c))
                    toggle(next, t);
            current = std::move(next);
        }
        for (std::size_t c : current)
            toggle(out, c);
    }
    return out;
}

ClassSum act(const SteenrodModule& m, const SteenrodElement& e, std::size_t c)
{
    if (c >= m.size())
        throw std::out_of_range("class index " + std::to_string(c) + " is not in the module");
    return act(m, e, ClassSum{c});
}

}  // namespace sqlab
