#include "mmfusion/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mmfusion {

__extension__ using Wide = __int128;

// Builds reduced values from 128-bit intermediates.
struct RationalAccess {
    static Rational from_wide(Wide numerator, Wide denominator);
};

namespace {

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
    a = abs_wide(a);
    b = abs_wide(b);
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(Wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = RationalAccess::from_wide(numerator, denominator);
}

Rational RationalAccess::from_wide(Wide numerator, Wide denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const Wide g = gcd_wide(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits_int64(numerator) || !fits_int64(denominator)) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return Rational(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(denominator), Rational::Reduced{});
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    return Rational(num, den);
}

Rational Rational::operator-() const { return RationalAccess::from_wide(-static_cast<Wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& other) {
    *this = RationalAccess::from_wide(static_cast<Wide>(num_) * other.den_ + static_cast<Wide>(other.num_) * den_,
                      static_cast<Wide>(den_) * other.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
    // cross-reduce first so products of reduced fractions stay small;
    // denominators are >= 1 so both gcds are nonzero
    const Wide g1 = gcd_wide(num_, other.den_);
    const Wide g2 = gcd_wide(other.num_, den_);
    const Wide n = (num_ / g1) * (other.num_ / g2);
    const Wide d = (den_ / g2) * (other.den_ / g1);
    *this = RationalAccess::from_wide(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= RationalAccess::from_wide(other.den_, other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace mmfusion
