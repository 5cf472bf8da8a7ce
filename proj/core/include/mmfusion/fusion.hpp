#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmfusion/minimal_model.hpp"
#include "mmfusion/rational.hpp"

namespace mmfusion {

/// Largest sector count for which a dense tensor is built. N^3 bits at
/// this bound is 128 MiB.
inline constexpr std::size_t kMaxFusionSectors = 1024;

/// Multiplicity-free structure constants D(S_i, S_j, S_k) of the model,
/// indexed by sector position. Immutable once built.
///
/// D(i,j,k) = 1 iff the canonical labels of i and j complete to a
/// (p,q)-admissible triple with one of the two raw labels of k. At most
/// one of those two raw labels can complete the triple: p and q are not
/// both even, so the two candidate sums cannot both be odd.
class FusionTensor {
public:
    /// Throws CapacityError when N exceeds kMaxFusionSectors.
    explicit FusionTensor(const ModelParams& params);

    const ModelParams& model() const noexcept { return params_; }
    const std::vector<Sector>& sectors() const noexcept { return sectors_; }
    std::size_t size() const noexcept { return sectors_.size(); }

    bool coefficient(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        const std::size_t bit = (i * size() + j) * size() + k;
        return (bits_[bit >> 6] >> (bit & 63)) & 1U;
    }

    /// Sectors k with D(i,j,k) = 1, ascending.
    std::vector<std::size_t> product(std::size_t i, std::size_t j) const;

    /// Sector position of any raw Kac label.
    std::size_t index_of(KacLabel label) const { return sector_index(params_, label); }

private:
    ModelParams params_;
    std::vector<Sector> sectors_;
    std::vector<std::uint64_t> bits_;
};

FusionTensor fusion_tensor(const ModelParams& params);

/// Rational algebra on the sectors with S_i * S_j = sum_k D(i,j,k) S_k.
/// Elements are dense coefficient vectors in sector order.
class VerlindeAlgebra {
public:
    using Element = std::vector<Rational>;

    explicit VerlindeAlgebra(FusionTensor tensor) : tensor_(std::move(tensor)) {}

    const FusionTensor& tensor() const noexcept { return tensor_; }
    std::size_t dimension() const noexcept { return tensor_.size(); }

    Element basis(std::size_t i) const;
    /// S_(1,1), the multiplicative identity.
    Element unit() const { return basis(0); }

    /// Bilinear product. Throws ArgumentError on dimension mismatch.
    Element product(const Element& x, const Element& y) const;

    /// First basis triple (a,b,c), in lexicographic order, where
    /// (S_a S_b) S_c != S_a (S_b S_c); empty when associative.
    std::optional<std::array<std::size_t, 3>> associativity_defect() const;

    /// First basis pair with S_a S_b != S_b S_a.
    std::optional<std::array<std::size_t, 2>> commutativity_defect() const;

private:
    FusionTensor tensor_;
};

VerlindeAlgebra verlinde_algebra(const FusionTensor& tensor);

}  // namespace mmfusion
