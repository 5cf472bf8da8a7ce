#include <doctest.h>

#include <bit>
#include <random>

#include "mmfusion/bitvector.hpp"
#include "mmfusion/errors.hpp"

using namespace mmfusion;

TEST_CASE("weight and support") {
    const auto zero = BitVector::zero(5);
    CHECK(weight(zero) == 0);
    CHECK(support(zero).empty());
    const auto x = BitVector::parse("101");
    CHECK(x.width() == 3);
    CHECK(weight(x) == 2);
    CHECK(support(x) == std::vector<int>{1, 3});
    CHECK(x.test(1));
    CHECK_FALSE(x.test(2));
    CHECK(weight(BitVector::all_ones(7)) == 7);
    CHECK(weight(BitVector::all_ones(64)) == 64);
}

TEST_CASE("text form puts coordinate 1 first") {
    CHECK(BitVector::parse("100").bits() == 1);
    CHECK(BitVector::parse("001").bits() == 4);
    CHECK(BitVector(6, 4).to_string() == "0110");
    CHECK(BitVector::parse("").width() == 0);
    CHECK_THROWS_AS(BitVector::parse("10x"), ArgumentError);
}

TEST_CASE("construction rejects stray bits and bad widths") {
    CHECK_THROWS_AS(BitVector(8, 3), ArgumentError);
    CHECK_THROWS_AS(BitVector(0, 65), ArgumentError);
    CHECK_THROWS_AS(BitVector(0, -1), ArgumentError);
    CHECK_THROWS_AS(BitVector(1, 2).test(3), RangeError);
}

TEST_CASE("sum and product") {
    const auto x = BitVector::parse("1100");
    const auto y = BitVector::parse("1010");
    CHECK((x + y).to_string() == "0110");
    CHECK((x * y).to_string() == "1000");
    CHECK_THROWS_AS(x + BitVector::zero(3), ArgumentError);
    CHECK_THROWS_AS(x * BitVector::zero(5), ArgumentError);
}

TEST_CASE("symmetric difference weight identity examples") {
    CHECK(sym_diff_weight_identity(BitVector::parse("1100"), BitVector::parse("1010")) == std::pair{2, 2});
    const auto x = BitVector::parse("1011001");
    CHECK(sym_diff_weight_identity(x, x) == std::pair{0, 0});
    CHECK_THROWS_AS(sym_diff_weight_identity(x, BitVector::zero(6)), ArgumentError);
}

TEST_CASE("symmetric difference weight identity, exhaustive for small widths") {
    for (int r = 0; r <= 6; ++r) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << r); ++a) {
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b) {
                const auto [lhs, rhs] = sym_diff_weight_identity(BitVector(a, r), BitVector(b, r));
                CHECK(lhs == rhs);
                CHECK(lhs == std::popcount(a ^ b));
            }
        }
    }
}

TEST_CASE("symmetric difference weight identity, random pairs at r = 14") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t mask = (std::uint64_t{1} << 14) - 1;
        const BitVector x(rng() & mask, 14);
        const BitVector y(rng() & mask, 14);
        int direct = 0;
        for (int c = 1; c <= 14; ++c) direct += x.test(c) != y.test(c) ? 1 : 0;
        const auto [lhs, rhs] = sym_diff_weight_identity(x, y);
        CHECK(lhs == direct);
        CHECK(rhs == direct);
    }
}
