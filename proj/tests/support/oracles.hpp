#pragma once

// Test-only brute-force oracles. They restate definitions directly and
// share no code paths with the library routines they check.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// p-admissibility straight from the definition.
inline bool admissible(int p, int a, int b, int c) {
    const bool in_range = 0 < a && a < p && 0 < b && b < p && 0 < c && c < p;
    const int s = a + b + c;
    return in_range && s < 2 * p && s % 2 == 1 && a < b + c && b < a + c && c < a + b;
}

// { m3 in 1..p-1 : (m, m2, m3) admissible } by scanning.
inline std::vector<int> admissible_filter(int p, int m, int m2) {
    std::vector<int> out;
    for (int m3 = 1; m3 < p; ++m3) {
        if (admissible(p, m, m2, m3)) out.push_back(m3);
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// All words below 2^bits with the given popcount, by full scan.
inline std::vector<std::uint64_t> words_of_weight(int bits, int weight) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << bits); ++w) {
        if (std::popcount(w) == weight) out.push_back(w);
    }
    return out;
}

// Raw labels (m, n) of the model whose sector is `rep` (rep and its complement).
struct Label {
    int m;
    int n;
};

inline std::array<Label, 2> class_members(int p, int q, Label rep) { return {rep, Label{p - rep.m, q - rep.n}}; }

// Condition (1) and (2) by brute force over ordered pairs and over every
// raw admissible triple. label_of(g) returns a raw Kac label of g's sector;
// the oracle tries both raw labels of each sector itself.
inline bool covers(int p, int q, std::uint64_t order, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& add,
                   const std::function<Label(std::uint64_t)>& label_of) {
    auto same_sector = [&](Label a, Label b) {
        return (a.m == b.m && a.n == b.n) || (a.m == p - b.m && a.n == q - b.n);
    };
    auto extends = [&](Label a, Label b, Label c) {
        for (const auto x : class_members(p, q, a))
            for (const auto y : class_members(p, q, b))
                for (const auto z : class_members(p, q, c))
                    if (admissible(p, x.m, y.m, z.m) && admissible(q, x.n, y.n, z.n)) return true;
        return false;
    };
    for (std::uint64_t a = 0; a < order; ++a)
        for (std::uint64_t b = 0; b < order; ++b)
            if (!extends(label_of(a), label_of(b), label_of(add(a, b)))) return false;
    for (int m1 = 1; m1 < p; ++m1)
        for (int n1 = 1; n1 < q; ++n1)
            for (int m2 = 1; m2 < p; ++m2)
                for (int n2 = 1; n2 < q; ++n2)
                    for (int m3 = 1; m3 < p; ++m3)
                        for (int n3 = 1; n3 < q; ++n3) {
                            if (!admissible(p, m1, m2, m3) || !admissible(q, n1, n2, n3)) continue;
                            bool found = false;
                            for (std::uint64_t a = 0; a < order && !found; ++a) {
                                if (!same_sector(label_of(a), {m1, n1})) continue;
                                for (std::uint64_t b = 0; b < order && !found; ++b) {
                                    found = same_sector(label_of(b), {m2, n2}) &&
                                            same_sector(label_of(add(a, b)), {m3, n3});
                                }
                            }
                            if (!found) return false;
                        }
    return true;
}

}  // namespace oracle
