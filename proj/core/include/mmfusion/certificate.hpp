#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mmfusion/minimal_model.hpp"

namespace mmfusion {

enum class Verdict { Pass, Fail };

/// Condition (1) failure: first + second = sum, but the sector of the
/// sum does not occur in the fusion of the other two. When the failure
/// was detected on raw class labels, class_labels holds them.
struct SumWitness {
    std::vector<std::int64_t> first;
    std::vector<std::int64_t> second;
    std::vector<std::int64_t> sum;
    std::array<std::size_t, 3> sectors{};
    std::optional<std::array<KacLabel, 3>> class_labels;

    friend bool operator==(const SumWitness&, const SumWitness&) = default;
};

/// Condition (2) failure: an admissible triple no pair of elements realizes.
struct UncoveredTriple {
    std::array<KacLabel, 3> labels{};

    friend bool operator==(const UncoveredTriple&, const UncoveredTriple&) = default;
};

struct CoverStats {
    std::uint64_t pairs_checked = 0;    // unordered pairs {g1, g2}
    std::uint64_t triples_checked = 0;  // admissible raw-label triples

    friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

/// Verdict of a cover check. Group elements in witnesses are coordinate
/// tuples over group_factors. Stats do not depend on thread count.
struct CoverCertificate {
    Verdict verdict = Verdict::Pass;
    std::vector<std::int64_t> group_factors;
    std::variant<std::monostate, SumWitness, UncoveredTriple> witness;
    CoverStats stats;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
    std::uint64_t group_order() const noexcept {
        std::uint64_t order = 1;
        for (const auto f : group_factors) order *= static_cast<std::uint64_t>(f);
        return order;
    }

    friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

}  // namespace mmfusion
