#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sqlab::gf2 {

// Dense bit vector over F2.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i, bool v)
    {
        if (get(i) != v)
            flip(i);
    }
    bool is_zero() const noexcept;
    std::optional<std::size_t> lowest_set() const noexcept;

    BitVector& operator^=(const BitVector& rhs);
    bool operator==(const BitVector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-echelon span of inserted vectors, keyed by pivot (lowest set bit).
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension) {}

    // Returns true when v was independent of the current span.
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    void reduce(BitVector& v) const;

    std::size_t dimension_;
    std::vector<std::optional<std::size_t>> pivot_row_;
    std::vector<BitVector> rows_;
};

}  // namespace sqlab::gf2
