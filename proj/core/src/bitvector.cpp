#include "mmfusion/bitvector.hpp"

#include <string>

#include "mmfusion/errors.hpp"

namespace mmfusion {

namespace {

std::uint64_t width_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_same_width(const BitVector& x, const BitVector& y) {
    if (x.width() != y.width()) {
        throw ArgumentError("bit vector width mismatch (" + std::to_string(x.width()) + " vs " +
                            std::to_string(y.width()) + ")");
    }
}

}  // namespace

BitVector::BitVector(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxWidth) {
        throw ArgumentError("bit vector width " + std::to_string(width) + " outside [0, 64]");
    }
    if ((bits & ~width_mask(width)) != 0) {
        throw ArgumentError("bit vector has bits set beyond width " + std::to_string(width));
    }
}

BitVector BitVector::all_ones(int width) {
    if (width < 0 || width > kMaxWidth) {
        throw ArgumentError("bit vector width " + std::to_string(width) + " outside [0, 64]");
    }
    return BitVector(width_mask(width), width);
}

BitVector BitVector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxWidth)) {
        throw ArgumentError("bit string longer than 64 coordinates");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw ArgumentError("bit string '" + std::string(text) + "' contains a character other than 0/1");
        }
    }
    return BitVector(bits, static_cast<int>(text.size()));
}

std::vector<int> BitVector::support() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(weight()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

bool BitVector::test(int coordinate) const {
    if (coordinate < 1 || coordinate > width_) {
        throw RangeError("coordinate " + std::to_string(coordinate) + " outside 1.." + std::to_string(width_));
    }
    return (bits_ >> (coordinate - 1)) & 1U;
}

std::string BitVector::to_string() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
        if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

BitVector operator+(const BitVector& x, const BitVector& y) {
    require_same_width(x, y);
    return BitVector(x.bits_ ^ y.bits_, x.width_);
}

BitVector operator*(const BitVector& x, const BitVector& y) {
    require_same_width(x, y);
    return BitVector(x.bits_ & y.bits_, x.width_);
}

std::pair<int, int> sym_diff_weight_identity(const BitVector& x, const BitVector& y) {
    const BitVector sum = x + y;
    return {sum.weight(), x.weight() + y.weight() - 2 * (x * y).weight()};
}

}  // namespace mmfusion
