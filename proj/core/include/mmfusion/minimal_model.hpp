#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mmfusion/rational.hpp"

namespace mmfusion {

/// Upper bound on p and q. Keeps every intermediate of the weight
/// formula, which grows like (pq)^2, well inside 64 bits.
inline constexpr int kMaxModelParameter = 10000;

/// Coprime pair (p, q), both >= 2, identifying a minimal model.
class ModelParams {
public:
    /// Throws ArgumentError if p or q is < 2, > kMaxModelParameter,
    /// or gcd(p, q) != 1.
    ModelParams(int p, int q);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }

    /// N = (p-1)(q-1)/2, the number of distinct sectors.
    std::size_t sector_count() const noexcept {
        return static_cast<std::size_t>(p_ - 1) * static_cast<std::size_t>(q_ - 1) / 2;
    }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    int p_;
    int q_;
};

/// Raw Kac label (m, n) with 0 < m < p, 0 < n < q. Not canonicalized.
struct KacLabel {
    int m = 1;
    int n = 1;

    friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
};

/// One distinct module of the model: the class {(m,n), (p-m,q-n)} under
/// its canonical (lexicographically smaller) label.
struct Sector {
    KacLabel label;
    Rational h;
    std::size_t index = 0;  // position in sectors(params)

    /// Bracket notation used in tables, e.g. "[1/16]".
    std::string name() const { return "[" + h.to_string() + "]"; }

    friend bool operator==(const Sector&, const Sector&) = default;
};

Rational central_charge(const ModelParams& params);

/// h_{m,n} = ((np - mq)^2 - (p - q)^2) / (4pq). Throws RangeError
/// outside 0 < m < p, 0 < n < q.
Rational conformal_weight(const ModelParams& params, int m, int n);

bool in_kac_range(const ModelParams& params, KacLabel label) noexcept;

/// (p - m, q - n).
KacLabel complement(const ModelParams& params, KacLabel label);

/// Canonical sectors sorted by label; (1,1) is always first.
std::vector<Sector> sectors(const ModelParams& params);

Sector canonicalize(const ModelParams& params, int m, int n);
inline Sector canonicalize(const ModelParams& params, KacLabel label) {
    return canonicalize(params, label.m, label.n);
}

/// Position of the sector containing a raw label, without building
/// the sector list.
std::size_t sector_index(const ModelParams& params, KacLabel label);

/// 0 < m, m2, m3 < p; m + m2 + m3 odd and < 2p; strict triangle
/// inequalities. Out-of-range inputs are simply not admissible.
bool is_p_admissible(int p, int m, int m2, int m3) noexcept;

/// All m3 with (m, m2, m3) p-admissible, in closed form:
/// { m - m2 + 1 + 2i : 0 <= i < min(m2, p - m) }.
/// Requires 0 < m2 <= m < p, else ArgumentError.
std::vector<int> admissible_range(int p, int m, int m2);

bool is_pq_admissible(const ModelParams& params, KacLabel a, KacLabel b, KacLabel c) noexcept;

/// Full (p-1) x (q-1) grid of weights, row m-1, column n-1.
struct KacTable {
    ModelParams params;
    Rational central_charge;
    std::vector<std::vector<Rational>> weights;
};

KacTable kac_table(const ModelParams& params);

/// The unitary series member (p, p+1): c = 1 - 6/(p(p+1)).
KacTable unitary_discrete_series(int p);

}  // namespace mmfusion
