#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sqlab {

// Bit string, most significant bit first. Leading zeros are kept: 0110 and 110
// are different strings with the same value.
class BinaryString {
public:
    BinaryString() = default;
    explicit BinaryString(std::string_view bits);

    // Dyadic expansion of n without leading zeros; empty for n == 0.
    static BinaryString of(std::uint64_t n);

    std::size_t length() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool bit(std::size_t i) const { return bits_.at(i); }

    // |s|, the integer with this expansion.
    std::uint64_t value() const;
    std::size_t count_ones() const noexcept;
    std::size_t trailing_zeros() const noexcept;

    BinaryString prefix(std::size_t len) const;
    BinaryString suffix(std::size_t len) const;
    BinaryString with_leading_zeros(std::size_t count) const;
    BinaryString operator+(const BinaryString& rhs) const;

    std::string to_string() const;
    bool operator==(const BinaryString&) const = default;

private:
    std::vector<bool> bits_;
};

std::ostream& operator<<(std::ostream& os, const BinaryString& s);

// Number of non-trailing zeros: zeros with a 1 somewhere to their right.
// 0 for the empty string and for all-zero strings.
std::size_t z_count(const BinaryString& s);

// [n] = alpha beta with |alpha| < z(beta) and len(beta) minimal.
struct Split {
    BinaryString alpha;
    BinaryString beta;
    std::size_t padding = 0;  // leading zeros prepended to [n]
};

// Exhaustive search over paddings 0 .. len([n])+1 and every cut point; minimal
// len(beta) wins, ties go to the smaller padding.
Split find_split(std::uint64_t n);

// F(n) = n - 2^{len(beta) - 2} + 1.
std::int64_t johnson_merzel_f(std::uint64_t n);
// F computed from the split of a padded expansion 0^p [n].
std::int64_t johnson_merzel_f_padded(std::uint64_t n, std::size_t padding);

// Lower bound F(2n+2) on the loop count for S^{2n+1}; sphere_dim must be odd.
std::int64_t loop_bound(std::int64_t sphere_dim);

}  // namespace sqlab
