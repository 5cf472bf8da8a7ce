#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmfusion {

/// Element of Z_2^r packed into a machine word. Coordinate i (1-based)
/// lives in bit i-1; bits at or above the width are always clear.
class BitVector {
public:
    static constexpr int kMaxWidth = 64;

    constexpr BitVector() noexcept = default;
    /// Throws ArgumentError if width is outside [0, 64] or bits has a
    /// set bit at or above width.
    BitVector(std::uint64_t bits, int width);

    static BitVector zero(int width) { return BitVector(0, width); }
    static BitVector all_ones(int width);

    /// Parses "x_1 x_2 ... x_r" written without separators, e.g. "101".
    static BitVector parse(std::string_view text);

    std::uint64_t bits() const noexcept { return bits_; }
    int width() const noexcept { return width_; }

    int weight() const noexcept { return std::popcount(bits_); }
    /// 1-based coordinates of the set bits, ascending.
    std::vector<int> support() const;
    bool test(int coordinate) const;

    /// Coordinate 1 first, matching parse().
    std::string to_string() const;

    /// Group sum (coordinate-wise xor). Throws ArgumentError on width mismatch.
    friend BitVector operator+(const BitVector& x, const BitVector& y);
    /// Boolean-ring product (coordinate-wise and).
    friend BitVector operator*(const BitVector& x, const BitVector& y);

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::uint64_t bits_ = 0;
    int width_ = 0;
};

inline int weight(const BitVector& x) noexcept { return x.weight(); }
inline std::vector<int> support(const BitVector& x) { return x.support(); }

/// (wt(x + y), wt(x) + wt(y) - 2 wt(x * y)); the two always agree.
std::pair<int, int> sym_diff_weight_identity(const BitVector& x, const BitVector& y);

}  // namespace mmfusion
