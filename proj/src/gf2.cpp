#include "sqlab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace sqlab::gf2 {

bool BitVector::is_zero() const noexcept
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

std::optional<std::size_t> BitVector::lowest_set() const noexcept
{
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0)
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& rhs)
{
    if (rhs.size_ != size_)
        throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= rhs.words_[k];
    return *this;
}

void EchelonSpan::reduce(BitVector& v) const
{
    // XOR with the row pivoted at p clears bit p and only touches higher bits.
    while (auto p = v.lowest_set()) {
        const auto& row = pivot_row_[*p];
        if (!row)
            return;
        v ^= rows_[*row];
    }
}

bool EchelonSpan::insert(BitVector v)
{
    if (v.size() != dimension_)
        throw std::invalid_argument("vector dimension does not match span");
    reduce(v);
    auto p = v.lowest_set();
    if (!p)
        return false;
    pivot_row_[*p] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

bool EchelonSpan::contains(BitVector v) const
{
    if (v.size() != dimension_)
        throw std::invalid_argument("vector dimension does not match span");
    reduce(v);
    return v.is_zero();
}

}  // namespace sqlab::gf2
