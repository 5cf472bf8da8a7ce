#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmfusion/certificate.hpp"
#include "mmfusion/fusion.hpp"

namespace mmfusion {

/// Largest group order handled by labelings and verification.
inline constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 26;

/// Finite abelian group Z_{k1} x ... x Z_{kt} given by its factors.
/// Elements are mixed-radix tuples; their dense index puts the first
/// factor in the least significant position, so for Z_2^t the index is
/// the bit vector with coordinate 1 in bit 0.
class AbelianGroupSpec {
public:
    AbelianGroupSpec() = default;
    /// Throws ArgumentError for a factor < 2, CapacityError when the
    /// order exceeds kMaxGroupOrder.
    explicit AbelianGroupSpec(std::vector<std::int64_t> factors);

    static AbelianGroupSpec cyclic(std::int64_t order);
    static AbelianGroupSpec elementary_two_group(int rank);

    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
    std::uint64_t order() const noexcept { return order_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t negate(std::uint64_t a) const noexcept;

    std::vector<std::int64_t> coordinates(std::uint64_t index) const;
    /// Throws RangeError if a coordinate is outside its factor.
    std::uint64_t index_of(std::span<const std::int64_t> coordinates) const;

    /// "Z4", "Z2xZ2", or "1" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

private:
    std::vector<std::int64_t> factors_;
    std::uint64_t order_ = 1;
};

/// Total labeling of a group by sector indices. The identity carries
/// sector 0, the (1,1) sector.
class LabeledGroup {
public:
    /// Throws ArgumentError if labels does not cover every element or the
    /// identity is not labeled 0.
    LabeledGroup(AbelianGroupSpec spec, std::vector<std::uint32_t> labels);

    const AbelianGroupSpec& spec() const noexcept { return spec_; }
    const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
    std::uint32_t label(std::uint64_t element) const { return labels_.at(element); }

    friend bool operator==(const LabeledGroup&, const LabeledGroup&) = default;

private:
    AbelianGroupSpec spec_;
    std::vector<std::uint32_t> labels_;
};

/// Checks both cover conditions with the group law of lg. Throws
/// ArgumentError if a label is not a sector of the tensor's model.
CoverCertificate verify_abelian_cover(const LabeledGroup& lg, const FusionTensor& tensor, unsigned threads = 1);

/// Re-derives a FAIL certificate's witness from scratch: a sum witness
/// must add up and have a non-fusing sector triple; an uncovered triple
/// must be admissible and realized by no pair. False for PASS.
bool witness_confirms_failure(const LabeledGroup& lg, const FusionTensor& tensor, const CoverCertificate& cert);

/// For each sector k, the maximum over rows i of |{ j : D(i,j,k) = 1 }|.
std::vector<int> multiplicity_profile(const FusionTensor& tensor);

struct SearchOptions {
    /// max_order above this throws CapacityError.
    std::int64_t order_budget = 24;
    /// Skip orders below the sum of the multiplicity profile.
    bool profile_bound = true;
    unsigned threads = 1;
};

/// Every covering labeling of Z_k for k <= max_order, keeping one of
/// each pair {x -> L(x), x -> L(-x)} (the lexicographically smaller label
/// sequence). Sorted by order, then by label sequence.
std::vector<LabeledGroup> search_cyclic_covers(const FusionTensor& tensor, std::int64_t max_order,
                                               const SearchOptions& options = {});

}  // namespace mmfusion
