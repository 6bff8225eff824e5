#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sqlab {

struct Generator {
    std::string name;
    std::int64_t degree = 0;

    auto operator<=>(const Generator&) const = default;
    bool operator==(const Generator&) const = default;
};

// Q_{i_1} Q_{i_2} ... Q_{i_m}(g), lower indexed, outermost operation first.
// |Q_i(x)| = i + 2|x|. Index 0 is the squaring operation and marks the word
// as a square. When formal_top is set the outermost symbol is the formal
// top class Qbar rather than an operation.
class DLWord {
public:
    explicit DLWord(Generator g, std::vector<std::int64_t> indices = {}, bool formal_top = false);

    const Generator& generator() const noexcept { return generator_; }
    const std::vector<std::int64_t>& indices() const noexcept { return indices_; }
    bool formal_top() const noexcept { return formal_top_; }
    std::size_t length() const noexcept { return indices_.size(); }
    std::int64_t degree() const noexcept;
    bool is_square() const noexcept;

    // Q_r applied on the outside. r must be >= 0.
    DLWord apply(std::int64_t r) const;
    // The word with the outermost operation removed.
    DLWord inner() const;

    auto operator<=>(const DLWord&) const = default;
    bool operator==(const DLWord&) const = default;

private:
    std::vector<std::int64_t> indices_;
    Generator generator_;
    bool formal_top_ = false;
};

class DLElement {
public:
    DLElement() = default;
    DLElement(DLWord w) { terms_.insert(std::move(w)); }

    const std::set<DLWord>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void toggle(const DLWord& w);
    bool is_homogeneous() const noexcept;
    std::optional<std::int64_t> degree() const noexcept;

    DLElement& operator+=(const DLElement& rhs);
    friend DLElement operator+(DLElement a, const DLElement& b) { return a += b; }
    bool operator==(const DLElement&) const = default;

private:
    std::set<DLWord> terms_;
};

enum class FiberKind {
    Deg2Fiber,  // Omega^k S^N {[2]}: top class v, bottom class u
    PsiFiber,   // Omega^k S^N {Psi}: top class v, bottom class u
    QPsiFiber,  // (Omega^k Q S^N){Psi}: top class z, bottom class w
};

std::string to_string(FiberKind kind);

// Generators of the loop-space homology models in the stable range: the top
// class in degree N-k, the bottom class in degree N-k-1, with Sq^1_* taking
// top to bottom and every other positive Sq^i_* vanishing on generators.
class FiberModel {
public:
    // k = 2^n loops on S^N, N = q 2^{n+2} + 1.
    static FiberModel specialized(FiberKind kind, int n, int q);
    static FiberModel generic(FiberKind kind, std::int64_t loops, std::int64_t sphere_dim);

    FiberKind kind() const noexcept { return kind_; }
    std::int64_t loops() const noexcept { return loops_; }
    std::int64_t sphere_dim() const noexcept { return sphere_dim_; }
    const Generator& top() const noexcept { return top_; }
    const Generator& bottom() const noexcept { return bottom_; }
    bool owns(const Generator& g) const noexcept { return g == top_ || g == bottom_; }

    // Base coaction Sq^i_*(g).
    DLElement sq_generator(std::int64_t i, const Generator& g) const;

    // Largest Q index defined on g: k-1 on the top class of an Omega^k fibre,
    // k on the bottom class (it comes from Omega^{k+1}); none on the QS^N model.
    std::optional<std::int64_t> natural_index_cap(const Generator& g) const;

    // Q_{k-1} on the top class; the formal Qbar_{k-1}(v) in the Psi model.
    DLWord top_word() const;

    // Same loops and sphere, other fibre.
    FiberModel companion(FiberKind kind) const;

    // Degree 3|u| bounding where the length <= 1 primitive basis is valid.
    std::int64_t primitive_window() const noexcept { return 3 * bottom_.degree; }

    std::vector<std::string> assumptions() const;

private:
    FiberModel(FiberKind kind, std::int64_t loops, std::int64_t sphere_dim);

    FiberKind kind_;
    std::int64_t loops_;
    std::int64_t sphere_dim_;
    Generator top_;
    Generator bottom_;
};

// Nishida relations, lower indexed:
//   Sq^t_* Q_r(x) = sum_{i >= 0} (t-2i, r+|x|-2t+2i) Q_{r-t+2i} Sq^i_*(x)
// with (a,b) = (a+b)!/(a!b!), (a,b) = 0 when a or b is negative and Q_{<0} = 0.
// Throws std::invalid_argument on words foreign to the model and on formal
// Qbar words, whose action is only reachable through gamma_star.
DLElement sq_lower(std::int64_t t, const DLElement& e, const FiberModel& model);

// gamma_*: H_* Omega^k S^N{Psi} -> H_*(Omega^k QS^N){Psi}.
// Q_I(v) -> Q_I(z), Q_I(u) -> Q_I(w), Qbar_{k-1}(v) -> Q_{k-1}(z) + Q_{k+1}(w).
// Refuses N = 3 mod 4 and words with Qbar below the outermost position.
DLElement gamma_star(const DLElement& e, const FiberModel& psi_model);

// {u, v, Q_i(u), Q_j(v)} (Qbar_{k-1}(v) for the Psi model) with 1 <= index <=
// cap and degree <= window, ordered by degree then generator then index.
// index_cap is intersected with the model's natural caps. Throws when
// window exceeds 3|u|.
std::vector<DLWord> primitive_basis(const FiberModel& model, std::int64_t window,
                                    std::optional<std::int64_t> index_cap = std::nullopt);
std::vector<DLWord> primitives_in_degree(const FiberModel& model, std::int64_t degree,
                                         std::optional<std::int64_t> index_cap = std::nullopt);

struct DistinguishReport {
    int n = 0;
    int q = 0;
    std::int64_t loops = 0;
    std::int64_t sphere_dim = 0;
    std::int64_t degree = 0;
    std::int64_t square_index = 0;  // 2^n
    DLWord deg2_primitive{Generator{}};
    DLElement deg2_value;
    bool deg2_coefficient = false;  // (2^n - 2, q 2^{n+2} - 2^{n+1} + 2) mod 2
    DLWord psi_primitive{Generator{}};
    DLElement gamma_image;
    DLElement qpsi_value;
    bool qpsi_coefficient = false;  // (2^n, q 2^{n+2} - 2^{n+1} + 1) mod 2
    bool modules_differ = false;
    std::vector<std::string> assumptions;
};

// Compares Sq^{2^n}_* on the unique primitive of degree 2(N-k) + k - 1 in the
// [2] fibre and, through gamma_*, in the Psi fibre, for k = 2^n and
// N = q 2^{n+2} + 1. Needs n > 1 and q >= 1.
DistinguishReport distinguish(int n, int q);

std::string to_string(const DLWord& w);
std::string to_string(const DLElement& e);
std::ostream& operator<<(std::ostream& os, const DLWord& w);
std::ostream& operator<<(std::ostream& os, const DLElement& e);

}  // namespace sqlab
