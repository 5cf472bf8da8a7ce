#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "mmfusion/errors.hpp"
#include "mmfusion/fusion.hpp"
#include "support/oracles.hpp"
#include "support/printed_tables.hpp"

using namespace mmfusion;

namespace {

std::size_t by_weight(const FusionTensor& t, const std::string& h) {
    for (const auto& s : t.sectors()) {
        if (s.h.to_string() == h) return s.index;
    }
    FAIL("no sector with weight " << h);
    return 0;
}

void check_against_printed(const FusionTensor& t, const printed::FusionTable& table) {
    const auto& header = table.header;
    REQUIRE(header.size() == t.size());
    for (std::size_t r = 0; r < header.size(); ++r) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            std::set<std::size_t> expected;
            for (const auto& w : printed::cell_weights(table.cells[r][c])) expected.insert(by_weight(t, w));
            const auto got = t.product(by_weight(t, header[r]), by_weight(t, header[c]));
            CHECK(std::set<std::size_t>(got.begin(), got.end()) == expected);
        }
    }
}

// D(i,j,k) straight from the oracle over all raw representatives.
bool oracle_coefficient(int p, int q, const Sector& a, const Sector& b, const Sector& c) {
    for (const auto x : oracle::class_members(p, q, {a.label.m, a.label.n}))
        for (const auto y : oracle::class_members(p, q, {b.label.m, b.label.n}))
            for (const auto z : oracle::class_members(p, q, {c.label.m, c.label.n}))
                if (oracle::admissible(p, x.m, y.m, z.m) && oracle::admissible(q, x.n, y.n, z.n)) return true;
    return false;
}

}  // namespace

TEST_CASE("Ising and tricritical tables match the printed ones") {
    check_against_printed(fusion_tensor(ModelParams(3, 4)), printed::kIsingFusion);
    check_against_printed(fusion_tensor(ModelParams(4, 5)), printed::kTricriticalFusion);
}

TEST_CASE("fusion examples") {
    const auto ising = fusion_tensor(ModelParams(3, 4));
    CHECK(ising.product(1, 1) == std::vector<std::size_t>{0, 2});
    CHECK(ising.product(2, 2) == std::vector<std::size_t>{0});
    CHECK(ising.index_of({2, 2}) == 1);
    const auto trivial = fusion_tensor(ModelParams(2, 3));
    CHECK(trivial.size() == 1);
    CHECK(trivial.coefficient(0, 0, 0));
}

TEST_CASE("fusion tensor capacity") {
    CHECK_THROWS_AS(FusionTensor(ModelParams(46, 47)), CapacityError);
}

TEST_CASE("tensor agrees with the admissibility oracle, is symmetric, and has a unit") {
    for (int p = 2; p <= 9; ++p) {
        for (int q = p + 1; q <= 10; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto t = fusion_tensor(ModelParams(p, q));
            const auto& s = t.sectors();
            for (std::size_t i = 0; i < t.size(); ++i) {
                CHECK(t.product(0, i) == std::vector<std::size_t>{i});
                for (std::size_t j = 0; j < t.size(); ++j) {
                    for (std::size_t k = 0; k < t.size(); ++k) {
                        const bool d = t.coefficient(i, j, k);
                        CHECK(d == oracle_coefficient(p, q, s[i], s[j], s[k]));
                        CHECK(d == t.coefficient(j, i, k));
                        CHECK(d == t.coefficient(i, k, j));
                    }
                }
            }
        }
    }
}

TEST_CASE("exclusivity: at most one raw label of the third sector completes a triple") {
    for (int p = 2; p <= 9; ++p) {
        for (int q = p + 1; q <= 10; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int m1 = 1; m1 < p; ++m1)
                for (int n1 = 1; n1 < q; ++n1)
                    for (int m2 = 1; m2 < p; ++m2)
                        for (int n2 = 1; n2 < q; ++n2)
                            for (int m3 = 1; m3 < p; ++m3)
                                for (int n3 = 1; n3 < q; ++n3) {
                                    const bool direct =
                                        oracle::admissible(p, m1, m2, m3) && oracle::admissible(q, n1, n2, n3);
                                    const bool flipped = oracle::admissible(p, m1, m2, p - m3) &&
                                                         oracle::admissible(q, n1, n2, q - n3);
                                    CHECK_FALSE((direct && flipped));
                                }
        }
    }
}

TEST_CASE("fusion does not depend on the representative of the first two sectors") {
    for (const auto& [p, q] : {std::pair{3, 4}, {4, 5}, {3, 5}, {5, 7}, {3, 8}}) {
        const ModelParams params(p, q);
        const auto t = fusion_tensor(params);
        for (int m1 = 1; m1 < p; ++m1)
            for (int n1 = 1; n1 < q; ++n1)
                for (int m2 = 1; m2 < p; ++m2)
                    for (int n2 = 1; n2 < q; ++n2) {
                        std::set<std::size_t> raw;
                        for (int m3 = 1; m3 < p; ++m3)
                            for (int n3 = 1; n3 < q; ++n3)
                                if (is_pq_admissible(params, {m1, n1}, {m2, n2}, {m3, n3}))
                                    raw.insert(t.index_of({m3, n3}));
                        const auto prod = t.product(t.index_of({m1, n1}), t.index_of({m2, n2}));
                        CHECK(raw == std::set<std::size_t>(prod.begin(), prod.end()));
                    }
    }
}

TEST_CASE("Verlinde algebra products") {
    const auto v = verlinde_algebra(fusion_tensor(ModelParams(3, 4)));
    CHECK(v.product(v.basis(1), v.basis(1)) == VerlindeAlgebra::Element{1, 0, 1});
    CHECK(v.product(v.unit(), v.basis(2)) == v.basis(2));
    const VerlindeAlgebra::Element x{Rational(1, 2), 0, Rational(-1, 3)};
    CHECK(v.product(x, v.unit()) == x);
    CHECK_THROWS_AS(v.product(v.basis(0), VerlindeAlgebra::Element{1, 0}), ArgumentError);
    CHECK_THROWS_AS(v.basis(3), RangeError);
}

TEST_CASE("Verlinde algebra is commutative and associative") {
    for (int p = 2; p <= 7; ++p) {
        for (int q = p + 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto v = verlinde_algebra(fusion_tensor(ModelParams(p, q)));
            CHECK_FALSE(v.commutativity_defect().has_value());
            CHECK_FALSE(v.associativity_defect().has_value());
        }
    }
}
