#include "sqlab/loop_homology.hpp"

#include "sqlab/binomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sqlab {

DLWord::DLWord(Generator g, std::vector<std::int64_t> indices, bool formal_top)
    : indices_(std::move(indices)), generator_(std::move(g)), formal_top_(formal_top)
{
    for (auto i : indices_)
        if (i < 0)
            throw std::invalid_argument("Dyer-Lashof index must be non-negative, got " + std::to_string(i));
    if (formal_top_ && indices_.empty())
        throw std::invalid_argument("formal top word needs an outermost index");
}

std::int64_t DLWord::degree() const noexcept
{
    std::int64_t d = generator_.degree;
    for (auto it = indices_.rbegin(); it != indices_.rend(); ++it)
        d = *it + 2 * d;
    return d;
}

bool DLWord::is_square() const noexcept
{
    return std::find(indices_.begin(), indices_.end(), 0) != indices_.end();
}

DLWord DLWord::apply(std::int64_t r) const
{
    if (formal_top_)
        throw std::invalid_argument("cannot apply Q_" + std::to_string(r) + " to the formal word " + to_string(*this));
    std::vector<std::int64_t> idx;
    idx.reserve(indices_.size() + 1);
    idx.push_back(r);
    idx.insert(idx.end(), indices_.begin(), indices_.end());
    return DLWord(generator_, std::move(idx));
}

DLWord DLWord::inner() const
{
    if (indices_.empty())
        throw std::logic_error("generator word has no inner word");
    return DLWord(generator_, std::vector<std::int64_t>(indices_.begin() + 1, indices_.end()));
}

void DLElement::toggle(const DLWord& w)
{
    auto [it, inserted] = terms_.insert(w);
    if (!inserted)
        terms_.erase(it);
}

bool DLElement::is_homogeneous() const noexcept
{
    if (terms_.empty())
        return true;
    const auto d = terms_.begin()->degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const DLWord& w) { return w.degree() == d; });
}

std::optional<std::int64_t> DLElement::degree() const noexcept
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->degree();
}

DLElement& DLElement::operator+=(const DLElement& rhs)
{
    for (const auto& w : rhs.terms_)
        toggle(w);
    return *this;
}

std::string to_string(FiberKind kind)
{
    switch (kind) {
    case FiberKind::Deg2Fiber:
        return "deg2";
    case FiberKind::PsiFiber:
        return "psi";
    case FiberKind::QPsiFiber:
        return "qpsi";
    }
    return "?";
}

FiberModel::FiberModel(FiberKind kind, std::int64_t loops, std::int64_t sphere_dim)
    : kind_(kind), loops_(loops), sphere_dim_(sphere_dim)
{
    if (loops < 1)
        throw std::invalid_argument("fibre model needs at least one loop");
    if (sphere_dim - loops - 1 < 1)
        throw std::invalid_argument("fibre model needs N - k - 1 >= 1, got N=" + std::to_string(sphere_dim) +
                                    ", k=" + std::to_string(loops));
    const bool stable = kind == FiberKind::QPsiFiber;
    top_ = Generator{stable ? "z" : "v", sphere_dim - loops};
    bottom_ = Generator{stable ? "w" : "u", sphere_dim - loops - 1};
}

FiberModel FiberModel::generic(FiberKind kind, std::int64_t loops, std::int64_t sphere_dim)
{
    return FiberModel(kind, loops, sphere_dim);
}

FiberModel FiberModel::specialized(FiberKind kind, int n, int q)
{
    if (n < 1 || n > 20 || q < 1 || q > (1 << 20))
        throw std::invalid_argument("specialized fibre model needs 1 <= n <= 20 and 1 <= q <= 2^20");
    const std::int64_t loops = std::int64_t{1} << n;
    const std::int64_t sphere = static_cast<std::int64_t>(q) * (std::int64_t{1} << (n + 2)) + 1;
    return FiberModel(kind, loops, sphere);
}

FiberModel FiberModel::companion(FiberKind kind) const
{
    return FiberModel(kind, loops_, sphere_dim_);
}

DLElement FiberModel::sq_generator(std::int64_t i, const Generator& g) const
{
    if (!owns(g))
        throw std::invalid_argument("generator " + g.name + " does not belong to the " + to_string(kind_) + " model");
    if (i == 0)
        return DLElement(DLWord(g));
    if (i == 1 && g == top_)
        return DLElement(DLWord(bottom_));
    return {};
}

std::optional<std::int64_t> FiberModel::natural_index_cap(const Generator& g) const
{
    if (kind_ == FiberKind::QPsiFiber)
        return std::nullopt;
    return g == top_ ? loops_ - 1 : loops_;
}

DLWord FiberModel::top_word() const
{
    return DLWord(top_, {loops_ - 1}, kind_ == FiberKind::PsiFiber);
}

std::vector<std::string> FiberModel::assumptions() const
{
    std::vector<std::string> out{
        "Sq^1_* " + top_.name + " = " + bottom_.name,
        "Sq^i_* vanishes on " + top_.name + " and " + bottom_.name + " for i >= 2, and Sq^1_* " + bottom_.name + " = 0",
    };
    if (kind_ == FiberKind::PsiFiber)
        out.push_back("Qbar_" + std::to_string(loops_ - 1) + "(" + top_.name +
                      ") is formal; its Steenrod action is read through gamma_*");
    return out;
}

namespace {

DLElement sq_lower_word(std::int64_t t, const DLWord& word, const FiberModel& model)
{
    if (t == 0)
        return DLElement(word);
    if (word.formal_top())
        throw std::invalid_argument("Sq_* on the formal word " + to_string(word) + " is only defined through gamma_*");
    if (word.length() == 0)
        return model.sq_generator(t, word.generator());

    const std::int64_t r = word.indices().front();
    const DLWord x = word.inner();
    const std::int64_t q = x.degree();
    DLElement out;
    for (std::int64_t i = 0; 2 * i <= t; ++i) {
        const std::int64_t index = r - t + 2 * i;
        if (index < 0)
            continue;
        if (!binom_pair_mod2(t - 2 * i, r + q - 2 * t + 2 * i))
            continue;
        const DLElement lower = sq_lower_word(i, x, model);
        for (const auto& y : lower.terms())
            out.toggle(y.apply(index));
    }
    return out;
}

}  // namespace

DLElement sq_lower(std::int64_t t, const DLElement& e, const FiberModel& model)
{
    if (t < 0)
        throw std::invalid_argument("Sq_* index must be non-negative");
    DLElement out;
    for (const auto& w : e.terms()) {
        if (!model.owns(w.generator()))
            throw std::invalid_argument("word " + to_string(w) + " is not in the " + to_string(model.kind()) +
                                        " model");
        out += sq_lower_word(t, w, model);
    }
    return out;
}

DLElement gamma_star(const DLElement& e, const FiberModel& psi_model)
{
    if (psi_model.kind() != FiberKind::PsiFiber)
        throw std::invalid_argument("gamma_* is defined on the Psi fibre model");
    if (psi_model.sphere_dim() % 4 == 3)
        throw std::invalid_argument("gamma_* formula needs the sphere dimension N != 3 mod 4, got N=" +
                                    std::to_string(psi_model.sphere_dim()));
    const FiberModel target = psi_model.companion(FiberKind::QPsiFiber);
    const std::int64_t k = psi_model.loops();
    DLElement out;
    for (const auto& w : e.terms()) {
        if (!psi_model.owns(w.generator()))
            throw std::invalid_argument("word " + to_string(w) + " is not in the Psi model");
        const Generator& image_gen = w.generator() == psi_model.top() ? target.top() : target.bottom();
        if (w.formal_top()) {
            if (w.length() != 1 || w.indices().front() != k - 1 || w.generator() != psi_model.top())
                throw std::invalid_argument("gamma_* only handles the formal word Qbar_" + std::to_string(k - 1) +
                                            "(" + psi_model.top().name + "), got " + to_string(w));
            out.toggle(DLWord(target.top(), {k - 1}));
            out.toggle(DLWord(target.bottom(), {k + 1}));
        } else {
            out.toggle(DLWord(image_gen, w.indices()));
        }
    }
    return out;
}

std::vector<DLWord> primitive_basis(const FiberModel& model, std::int64_t window, std::optional<std::int64_t> index_cap)
{
    if (window > model.primitive_window())
        throw std::invalid_argument("primitive basis is only valid below degree " +
                                    std::to_string(model.primitive_window()) + ", requested " +
                                    std::to_string(window));
    std::vector<DLWord> out;
    for (const Generator* g : {&model.bottom(), &model.top()}) {
        if (g->degree > window)
            continue;
        out.emplace_back(*g);
        std::int64_t cap = window - 2 * g->degree;
        if (auto natural = model.natural_index_cap(*g))
            cap = std::min(cap, *natural);
        if (index_cap)
            cap = std::min(cap, *index_cap);
        for (std::int64_t i = 1; i <= cap; ++i) {
            const bool formal = model.kind() == FiberKind::PsiFiber && *g == model.top() && i == model.loops() - 1;
            out.emplace_back(*g, std::vector<std::int64_t>{i}, formal);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const DLWord& a, const DLWord& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a < b;
    });
    return out;
}

std::vector<DLWord> primitives_in_degree(const FiberModel& model, std::int64_t degree,
                                         std::optional<std::int64_t> index_cap)
{
    std::vector<DLWord> out;
    for (auto& w : primitive_basis(model, degree, index_cap))
        if (w.degree() == degree)
            out.push_back(std::move(w));
    return out;
}

DistinguishReport distinguish(int n, int q)
{
    if (n <= 1 || q < 1)
        throw std::invalid_argument("distinguish needs n > 1 and q >= 1 (\"If n>1 and q>=1\"), got n=" +
                                    std::to_string(n) + ", q=" + std::to_string(q));
    const auto deg2 = FiberModel::specialized(FiberKind::Deg2Fiber, n, q);
    const auto psi = deg2.companion(FiberKind::PsiFiber);
    const auto qpsi = deg2.companion(FiberKind::QPsiFiber);

    DistinguishReport r;
    r.n = n;
    r.q = q;
    r.loops = deg2.loops();
    r.sphere_dim = deg2.sphere_dim();
    r.square_index = std::int64_t{1} << n;
    r.degree = deg2.top_word().degree();

    const auto deg2_prims = primitives_in_degree(deg2, r.degree);
    const auto psi_prims = primitives_in_degree(psi, r.degree);
    if (deg2_prims.size() != 1 || psi_prims.size() != 1)
        throw std::logic_error("primitive in degree " + std::to_string(r.degree) + " is not unique");
    r.deg2_primitive = deg2_prims.front();
    r.psi_primitive = psi_prims.front();

    const std::int64_t p = r.square_index;
    const std::int64_t base = static_cast<std::int64_t>(q) * (p << 2);
    r.deg2_coefficient = binom_pair_mod2(p - 2, base - 2 * p + 2);
    r.qpsi_coefficient = binom_pair_mod2(p, base - 2 * p + 1);

    r.deg2_value = sq_lower(p, DLElement(r.deg2_primitive), deg2);
    r.gamma_image = gamma_star(DLElement(r.psi_primitive), psi);
    r.qpsi_value = sq_lower(p, r.gamma_image, qpsi);
    // A nonzero image downstairs forces Sq_* Qbar != 0 upstairs by naturality.
    r.modules_differ = r.deg2_value.is_zero() && !r.qpsi_value.is_zero();

    r.assumptions = deg2.assumptions();
    for (auto& a : psi.assumptions())
        if (std::find(r.assumptions.begin(), r.assumptions.end(), a) == r.assumptions.end())
            r.assumptions.push_back(std::move(a));
    for (auto& a : qpsi.assumptions())
        if (std::find(r.assumptions.begin(), r.assumptions.end(), a) == r.assumptions.end())
            r.assumptions.push_back(std::move(a));
    return r;
}

std::string to_string(const DLWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.indices().size(); ++i) {
        out += (i == 0 && w.formal_top()) ? "Qbar" : "Q";
        out += std::to_string(w.indices()[i]);
        out += ' ';
    }
    return out + w.generator().name;
}

std::string to_string(const DLElement& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& w : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(w);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DLWord& w)
{
    return os << to_string(w);
}

std::ostream& operator<<(std::ostream& os, const DLElement& e)
{
    return os << to_string(e);
}

}  // namespace sqlab
