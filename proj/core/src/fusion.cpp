#include "mmfusion/fusion.hpp"

#include <algorithm>
#include <string>

#include "mmfusion/errors.hpp"

namespace mmfusion {

FusionTensor::FusionTensor(const ModelParams& params) : params_(params) {
    const std::size_t n = params.sector_count();
    if (n > kMaxFusionSectors) {
        throw CapacityError("fusion tensor for (" + std::to_string(params.p()) + "," + std::to_string(params.q()) +
                            ") has " + std::to_string(n) + " sectors; limit is " +
                            std::to_string(kMaxFusionSectors));
    }
    sectors_ = mmfusion::sectors(params);
    bits_.assign((n * n * n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const KacLabel a = sectors_[i].label;
                const KacLabel b = sectors_[j].label;
                const KacLabel c = sectors_[k].label;
                if (is_pq_admissible(params, a, b, c) || is_pq_admissible(params, a, b, complement(params, c))) {
                    const std::size_t bit = (i * n + j) * n + k;
                    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
                }
            }
        }
    }
}

std::vector<std::size_t> FusionTensor::product(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < size(); ++k) {
        if (coefficient(i, j, k)) out.push_back(k);
    }
    return out;
}

FusionTensor fusion_tensor(const ModelParams& params) { return FusionTensor(params); }

VerlindeAlgebra::Element VerlindeAlgebra::basis(std::size_t i) const {
    if (i >= dimension()) throw RangeError("basis index " + std::to_string(i) + " out of range");
    Element e(dimension());
    e[i] = 1;
    return e;
}

VerlindeAlgebra::Element VerlindeAlgebra::product(const Element& x, const Element& y) const {
    const std::size_t n = dimension();
    if (x.size() != n || y.size() != n) {
        throw ArgumentError("Verlinde product expects vectors of dimension " + std::to_string(n));
    }
    Element out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Rational w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (tensor_.coefficient(i, j, k)) out[k] += w;
            }
        }
    }
    return out;
}

std::optional<std::array<std::size_t, 3>> VerlindeAlgebra::associativity_defect() const {
    // Structure constants are 0/1, so integer counts suffice.
    const std::size_t n = dimension();
    std::vector<long> left(n);
    std::vector<long> right(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (tensor_.coefficient(a, b, k)) {
                        for (std::size_t l = 0; l < n; ++l) left[l] += tensor_.coefficient(k, c, l);
                    }
                    if (tensor_.coefficient(b, c, k)) {
                        for (std::size_t l = 0; l < n; ++l) right[l] += tensor_.coefficient(a, k, l);
                    }
                }
                if (left != right) return std::array{a, b, c};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> VerlindeAlgebra::commutativity_defect() const {
    const std::size_t n = dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < n; ++k) {
                if (tensor_.coefficient(a, b, k) != tensor_.coefficient(b, a, k)) return std::array{a, b};
            }
        }
    }
    return std::nullopt;
}

VerlindeAlgebra verlinde_algebra(const FusionTensor& tensor) { return VerlindeAlgebra(tensor); }

}  // namespace mmfusion
