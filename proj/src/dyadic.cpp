#include "sqlab/dyadic.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace sqlab {

BinaryString::BinaryString(std::string_view bits)
{
    bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("binary string may only contain 0 and 1: \"" + std::string(bits) + "\"");
        bits_.push_back(c == '1');
    }
}

BinaryString BinaryString::of(std::uint64_t n)
{
    BinaryString s;
    for (; n != 0; n >>= 1)
        s.bits_.push_back(n & 1);
    std::reverse(s.bits_.begin(), s.bits_.end());
    return s;
}

std::uint64_t BinaryString::value() const
{
    std::uint64_t v = 0;
    for (bool b : bits_) {
        if (v >> 63)
            throw std::overflow_error("binary string value exceeds 64 bits");
        v = (v << 1) | (b ? 1u : 0u);
    }
    return v;
}

std::size_t BinaryString::count_ones() const noexcept
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::size_t BinaryString::trailing_zeros() const noexcept
{
    std::size_t n = 0;
    for (auto it = bits_.rbegin(); it != bits_.rend() && !*it; ++it)
        ++n;
    return n;
}

BinaryString BinaryString::prefix(std::size_t len) const
{
    if (len > bits_.size())
        throw std::out_of_range("prefix longer than string");
    BinaryString s;
    s.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(len));
    return s;
}

BinaryString BinaryString::suffix(std::size_t len) const
{
    if (len > bits_.size())
        throw std::out_of_range("suffix longer than string");
    BinaryString s;
    s.bits_.assign(bits_.end() - static_cast<std::ptrdiff_t>(len), bits_.end());
    return s;
}

BinaryString BinaryString::with_leading_zeros(std::size_t count) const
{
    BinaryString s;
    s.bits_.assign(count, false);
    s.bits_.insert(s.bits_.end(), bits_.begin(), bits_.end());
    return s;
}

BinaryString BinaryString::operator+(const BinaryString& rhs) const
{
    BinaryString s = *this;
    s.bits_.insert(s.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
    return s;
}

std::string BinaryString::to_string() const
{
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_)
        out += b ? '1' : '0';
    return out;
}

std::ostream& operator<<(std::ostream& os, const BinaryString& s)
{
    return os << s.to_string();
}

std::size_t z_count(const BinaryString& s)
{
    std::size_t zeros = 0;
    bool seen_one = false;
    // Right to left: a zero counts once some 1 has been seen to its right.
    for (std::size_t i = s.length(); i-- > 0;) {
        if (s.bit(i))
            seen_one = true;
        else if (seen_one)
            ++zeros;
    }
    return zeros;
}

namespace {

std::optional<Split> search_split(const BinaryString& padded_start, std::size_t base_padding, std::size_t max_extra)
{
    std::optional<Split> best;
    for (std::size_t extra = 0; extra <= max_extra; ++extra) {
        const BinaryString s = padded_start.with_leading_zeros(extra);
        for (std::size_t len_beta = 0; len_beta <= s.length(); ++len_beta) {
            if (best && len_beta >= best->beta.length())
                break;
            BinaryString alpha = s.prefix(s.length() - len_beta);
            BinaryString beta = s.suffix(len_beta);
            if (alpha.value() < z_count(beta)) {
                best = Split{std::move(alpha), std::move(beta), base_padding + extra};
                break;
            }
        }
    }
    return best;
}

}  // namespace

Split find_split(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("find_split needs a positive integer");
    const BinaryString expansion = BinaryString::of(n);
    auto best = search_split(expansion, 0, expansion.length() + 1);
    // One leading zero already gives z >= 1 for the whole string with alpha empty.
    if (!best)
        throw std::logic_error("no split found for " + std::to_string(n));
    return *best;
}

std::int64_t johnson_merzel_f_padded(std::uint64_t n, std::size_t padding)
{
    if (n == 0)
        throw std::invalid_argument("F needs a positive integer");
    const BinaryString start = BinaryString::of(n).with_leading_zeros(padding);
    auto best = search_split(start, padding, start.length() + 1);
    if (!best)
        throw std::logic_error("no split found for " + std::to_string(n));
    const std::size_t len_beta = best->beta.length();
    return static_cast<std::int64_t>(n) - (std::int64_t{1} << (len_beta - 2)) + 1;
}

std::int64_t johnson_merzel_f(std::uint64_t n)
{
    return johnson_merzel_f_padded(n, 0);
}

std::int64_t loop_bound(std::int64_t sphere_dim)
{
    if (sphere_dim <= 0 || sphere_dim % 2 == 0)
        throw std::invalid_argument("loop_bound needs an odd positive sphere dimension, got " +
                                    std::to_string(sphere_dim));
    return johnson_merzel_f(static_cast<std::uint64_t>(sphere_dim + 1));
}

}  // namespace sqlab
