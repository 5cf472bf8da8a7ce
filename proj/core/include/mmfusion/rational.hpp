#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mmfusion {

/// Exact fraction, always stored in lowest terms with a positive
/// denominator, so structural equality is value equality.
///
/// Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit in 64 bits.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;

    /// Inverse of to_string(); also accepts non-reduced input like "2/4".
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Reduced {};
    Rational(std::int64_t numerator, std::int64_t denominator, Reduced) noexcept
        : num_(numerator), den_(denominator) {}
    friend struct RationalAccess;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace mmfusion
