#include "mmfusion/minimal_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mmfusion/errors.hpp"

namespace mmfusion {

namespace {

std::string label_text(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void require_kac_range(const ModelParams& params, int m, int n) {
    if (!in_kac_range(params, {m, n})) {
        throw RangeError("Kac label " + label_text(m, n) + " outside 0<m<" + std::to_string(params.p()) +
                         ", 0<n<" + std::to_string(params.q()));
    }
}

}  // namespace

ModelParams::ModelParams(int p, int q) : p_(p), q_(q) {
    if (p < 2 || q < 2) {
        throw ArgumentError("model parameters must satisfy p, q >= 2 (got p=" + std::to_string(p) +
                            ", q=" + std::to_string(q) + ")");
    }
    if (p > kMaxModelParameter || q > kMaxModelParameter) {
        throw ArgumentError("model parameters must satisfy p, q <= " + std::to_string(kMaxModelParameter) +
                            " (got p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
    }
    if (std::gcd(p, q) != 1) {
        throw ArgumentError("model parameters must be coprime (gcd(" + std::to_string(p) + "," +
                            std::to_string(q) + ")=" + std::to_string(std::gcd(p, q)) + ")");
    }
}

Rational central_charge(const ModelParams& params) {
    const std::int64_t p = params.p();
    const std::int64_t q = params.q();
    return Rational(1) - Rational(6 * (p - q) * (p - q), p * q);
}

Rational conformal_weight(const ModelParams& params, int m, int n) {
    require_kac_range(params, m, n);
    const std::int64_t p = params.p();
    const std::int64_t q = params.q();
    const std::int64_t a = n * p - m * q;
    return Rational(a * a - (p - q) * (p - q), 4 * p * q);
}

bool in_kac_range(const ModelParams& params, KacLabel label) noexcept {
    return label.m > 0 && label.m < params.p() && label.n > 0 && label.n < params.q();
}

KacLabel complement(const ModelParams& params, KacLabel label) {
    require_kac_range(params, label.m, label.n);
    return {params.p() - label.m, params.q() - label.n};
}

std::size_t sector_index(const ModelParams& params, KacLabel label) {
    const KacLabel other = complement(params, label);
    const KacLabel canonical = std::min(label, other);
    // Every row m < p/2 is entirely canonical, and for even p the row
    // m = p/2 holds its canonical labels first, so the lexicographic
    // rank is the plain row-major offset.
    return static_cast<std::size_t>(canonical.m - 1) * static_cast<std::size_t>(params.q() - 1) +
           static_cast<std::size_t>(canonical.n - 1);
}

Sector canonicalize(const ModelParams& params, int m, int n) {
    const KacLabel other = complement(params, {m, n});
    const KacLabel canonical = std::min(KacLabel{m, n}, other);
    return Sector{canonical, conformal_weight(params, canonical.m, canonical.n), sector_index(params, canonical)};
}

std::vector<Sector> sectors(const ModelParams& params) {
    std::vector<Sector> out;
    out.reserve(params.sector_count());
    for (int m = 1; m < params.p(); ++m) {
        for (int n = 1; n < params.q(); ++n) {
            const KacLabel label{m, n};
            if (complement(params, label) < label) continue;
            out.push_back(Sector{label, conformal_weight(params, m, n), out.size()});
        }
    }
    return out;
}

bool is_p_admissible(int p, int m, int m2, int m3) noexcept {
    if (m <= 0 || m2 <= 0 || m3 <= 0 || m >= p || m2 >= p || m3 >= p) return false;
    const int sum = m + m2 + m3;
    if (sum >= 2 * p || sum % 2 == 0) return false;
    return m < m2 + m3 && m2 < m + m3 && m3 < m + m2;
}

std::vector<int> admissible_range(int p, int m, int m2) {
    if (!(0 < m2 && m2 <= m && m < p)) {
        throw ArgumentError("admissible_range requires 0 < m2 <= m < p (got p=" + std::to_string(p) +
                            ", m=" + std::to_string(m) + ", m2=" + std::to_string(m2) + ")");
    }
    const int count = std::min(m2, p - m);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(m - m2 + 1 + 2 * i);
    return out;
}

bool is_pq_admissible(const ModelParams& params, KacLabel a, KacLabel b, KacLabel c) noexcept {
    return is_p_admissible(params.p(), a.m, b.m, c.m) && is_p_admissible(params.q(), a.n, b.n, c.n);
}

KacTable kac_table(const ModelParams& params) {
    KacTable table{params, central_charge(params), {}};
    table.weights.resize(static_cast<std::size_t>(params.p() - 1));
    for (int m = 1; m < params.p(); ++m) {
        auto& row = table.weights[static_cast<std::size_t>(m - 1)];
        row.reserve(static_cast<std::size_t>(params.q() - 1));
        for (int n = 1; n < params.q(); ++n) row.push_back(conformal_weight(params, m, n));
    }
    return table;
}

KacTable unitary_discrete_series(int p) {
    if (p < 2) throw ArgumentError("unitary series requires p >= 2 (got " + std::to_string(p) + ")");
    return kac_table(ModelParams(p, p + 1));
}

}  // namespace mmfusion
