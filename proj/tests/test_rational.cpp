#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mmfusion/rational.hpp"

using mmfusion::Rational;

TEST_CASE("rational is kept in lowest terms with positive denominator") {
    const Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, -5).denominator() == 1);
    CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(7, 10) == Rational(-7, 10));
    CHECK(Rational(1) - Rational(6, 12) == Rational(1, 2));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 16) < Rational(1, 10));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(3, 80) > Rational(1, 80));
    CHECK((Rational(2, 4) <=> Rational(1, 2)) == std::strong_ordering::equal);
}

TEST_CASE("rational text form") {
    CHECK(Rational(1, 16).to_string() == "1/16");
    CHECK(Rational(-7, 10).to_string() == "-7/10");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse("3/80") == Rational(3, 80));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational::parse("0") == Rational(0));
    std::ostringstream os;
    os << Rational(3, 5);
    CHECK(os.str() == "3/5");
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    const Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational properties on random values") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
    std::uniform_int_distribution<std::int64_t> den(1, 100000);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        CHECK(std::gcd(a.numerator() < 0 ? -a.numerator() : a.numerator(), a.denominator()) ==
              (a.numerator() == 0 ? a.denominator() : 1));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}
