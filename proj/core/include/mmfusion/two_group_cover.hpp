#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmfusion/bitvector.hpp"
#include "mmfusion/certificate.hpp"
#include "mmfusion/cover_search.hpp"
#include "mmfusion/fusion.hpp"
#include "mmfusion/minimal_model.hpp"

namespace mmfusion {

/// Full Kac label of an H-class H_{m,n} = A_m + B_n.
using ClassLabel = KacLabel;

/// Largest r = p + q - 4 for which H fits in a machine word.
inline constexpr int kMaxTwoGroupRank = 62;

/// Largest r for which a cover map over all 2^(r-1) cosets is stored.
inline constexpr int kMaxMaterializedRank = 27;

enum class Part { A, B };

/// H = Z_2^r with r = p + q - 4, split into A on coordinates 1..p-2 and
/// B on coordinates p-1..p+q-4.
class GroupContext {
public:
    /// Throws CapacityError when r > kMaxTwoGroupRank.
    explicit GroupContext(const ModelParams& params);

    const ModelParams& params() const noexcept { return params_; }
    int rank() const noexcept { return rank_; }

    /// Inclusive 1-based coordinate ranges; empty when first > last.
    std::array<int, 2> a_coords() const noexcept { return {1, params_.p() - 2}; }
    std::array<int, 2> b_coords() const noexcept { return {params_.p() - 1, rank_}; }

    int part_size(Part part) const noexcept { return part == Part::A ? params_.p() - 2 : params_.q() - 2; }
    std::uint64_t part_mask(Part part) const noexcept { return part == Part::A ? a_mask_ : b_mask_; }
    int part_offset(Part part) const noexcept { return part == Part::A ? 0 : params_.p() - 2; }
    BitVector all_ones() const { return BitVector::all_ones(rank_); }

    friend bool operator==(const GroupContext&, const GroupContext&) = default;

private:
    ModelParams params_;
    int rank_;
    std::uint64_t a_mask_;
    std::uint64_t b_mask_;
};

/// (m, n) with m - 1 = weight of the A part and n - 1 = weight of the B
/// part. Throws ArgumentError on a width mismatch.
ClassLabel class_of(const GroupContext& ctx, const BitVector& x);

/// Every element of H_{m,n}, ascending; C(p-2, m-1) * C(q-2, n-1) of them.
std::vector<BitVector> class_members(const GroupContext& ctx, ClassLabel label);

/// The set A_{w1} + A_{w2} (or the B analogue), ascending. Labels are
/// orbit indices: A_w holds the weight w - 1 vectors of the part.
std::vector<BitVector> orbit_sum_set(const GroupContext& ctx, Part part, int w1, int w2);

/// Orbit labels w3 whose orbit meets orbit_sum_set(ctx, part, w1, w2).
std::vector<int> orbit_sum_classes(const GroupContext& ctx, Part part, int w1, int w2);

/// Element of G = H / I, I = {0, 1...1}, held by its numerically smaller
/// member. Representatives are exactly the values below 2^(r-1), so the
/// group law on G is xor of representatives.
struct Coset {
    BitVector representative;

    friend bool operator==(const Coset&, const Coset&) = default;
};

Coset coset_of(const GroupContext& ctx, const BitVector& x);

/// All 2^(r-1) cosets by ascending representative. Throws
/// CapacityError above kMaxMaterializedRank.
std::vector<Coset> quotient_cosets(const GroupContext& ctx);

/// Labeling of G by sectors. canonical() is the map h + I -> [h_{m,n}]
/// for h in H_{m,n}; from_assignment() accepts any labeling, e.g. a
/// deliberately corrupted one.
class CoverMap {
public:
    static CoverMap canonical(const GroupContext& ctx);
    /// assignment[g] is the sector index of the coset with representative
    /// g. Throws ArgumentError on a size mismatch or unknown sector.
    static CoverMap from_assignment(const GroupContext& ctx, std::vector<std::uint32_t> assignment);

    const GroupContext& context() const noexcept { return ctx_; }
    const std::vector<Sector>& sectors() const noexcept { return sectors_; }
    const std::vector<std::uint32_t>& assignment() const noexcept { return assignment_; }
    std::uint64_t coset_count() const noexcept { return assignment_.size(); }

    /// Whether every coset carries the sector of its H-class.
    bool respects_classes() const noexcept { return respects_classes_; }

private:
    CoverMap(const GroupContext& ctx, std::vector<std::uint32_t> assignment);

    GroupContext ctx_;
    std::vector<Sector> sectors_;
    std::vector<std::uint32_t> assignment_;
    bool respects_classes_ = false;
};

/// Sector assigned to g. For a class-respecting map, also checks that
/// both members of g canonicalize to that sector.
Sector phi(const CoverMap& cm, const Coset& g);

/// Checks both cover conditions for cm. Condition (1) is checked on the
/// assigned sectors through the fusion tensor and, for class-respecting
/// maps, also on the raw class labels of the representatives. Witness
/// elements are coordinates of G = Z_2^(r-1), i.e. the first r-1
/// coordinates of the representative. Throws ArgumentError when the
/// tensor belongs to another model.
CoverCertificate verify_cover(const CoverMap& cm, const FusionTensor& tensor, unsigned threads = 1);

/// Algebra W on the blocks P_i = phi^{-1}(S_i) with
/// P_i * P_j = sum over k in T(i,j) of P_k.
class PartitionAlgebra {
public:
    PartitionAlgebra(std::size_t dimension, std::vector<std::uint8_t> constants);

    std::size_t dimension() const noexcept { return n_; }
    bool constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return constants_[(i * n_ + j) * n_ + k] != 0;
    }
    /// k in T(i,j), ascending.
    std::vector<std::size_t> product(std::size_t i, std::size_t j) const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> constants_;
};

/// Throws StructuralError unless the block of sector (1,1) is exactly
/// {0}; the error names the first other element in that block.
PartitionAlgebra partition_algebra(const CoverMap& cm);

/// T(i,j) for the blocks of any labeling, without the identity-block
/// requirement. Empty blocks simply contribute nothing.
PartitionAlgebra block_algebra(const CoverMap& cm);

/// First (i,j,k) where W and the Verlinde structure constants differ.
/// Throws ArgumentError on a dimension mismatch.
std::optional<std::array<std::size_t, 3>> first_structure_mismatch(const PartitionAlgebra& w,
                                                                   const VerlindeAlgebra& v);

/// Whether S_i <-> P_i is an algebra isomorphism.
bool is_isomorphic_to_verlinde(const PartitionAlgebra& w, const VerlindeAlgebra& v);

/// The same labeling viewed as a general abelian group Z_2^(r-1).
/// Throws ArgumentError if the identity is not labeled (1,1).
LabeledGroup as_labeled_group(const CoverMap& cm);

}  // namespace mmfusion
