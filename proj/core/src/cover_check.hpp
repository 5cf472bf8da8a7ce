#pragma once

// Shared pair-scan engine behind verify_cover and verify_abelian_cover.
// Group elements are dense indices 0..order-1 with 0 the identity.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "mmfusion/certificate.hpp"
#include "mmfusion/fusion.hpp"

namespace mmfusion::detail {

using LabelSpan = std::span<const std::uint32_t>;

/// Dense N^3 bitset of sector triples (i, j, k) with some a in P_i,
/// b in P_j and a + b in P_k.
class TripleSet {
public:
    explicit TripleSet(std::size_t n) : n_(n), words_((n * n * n + 63) / 64, 0) {}

    void insert(std::size_t i, std::size_t j, std::size_t k) noexcept {
        const std::size_t bit = (i * n_ + j) * n_ + k;
        words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
    bool contains(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        const std::size_t bit = (i * n_ + j) * n_ + k;
        return (words_[bit >> 6] >> (bit & 63)) & 1U;
    }
    void merge(const TripleSet& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    }
    std::size_t dimension() const noexcept { return n_; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

struct PairViolation {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    bool on_class_labels = false;
};

struct PairScan {
    std::optional<PairViolation> violation;
    TripleSet realized;
};

/// Accepts every pair; used when no raw class labels exist.
struct NoClassCheck {
    bool operator()(std::uint64_t, std::uint64_t, std::uint64_t) const noexcept { return true; }
};

/// Scans unordered pairs a <= b in lexicographic order. Stops at the
/// first pair whose sum violates the fusion tensor (or, if the tensor
/// check passes, the class check). Workers take interleaved rows and
/// the reported violation is the lexicographically first one, so the
/// result does not depend on the thread count. realized is complete
/// only when no violation was found.
template <class Add, class ClassCheck>
PairScan scan_pairs(std::uint64_t order, LabelSpan labels, const FusionTensor& tensor, const Add& add,
                    const ClassCheck& class_ok, unsigned threads) {
    const std::size_t n = tensor.size();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(order, 1))));

    struct Local {
        std::optional<PairViolation> violation;
        TripleSet realized;
    };
    std::vector<Local> locals;
    locals.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) locals.push_back(Local{std::nullopt, TripleSet(n)});

    // Smallest row holding a known violation; rows beyond it cannot matter.
    std::atomic<std::uint64_t> cutoff{std::numeric_limits<std::uint64_t>::max()};

    auto work = [&](unsigned t) {
        Local& local = locals[t];
        for (std::uint64_t a = t; a < order; a += threads) {
            if (a > cutoff.load(std::memory_order_relaxed)) return;
            const std::uint32_t la = labels[a];
            for (std::uint64_t b = a; b < order; ++b) {
                const std::uint64_t c = add(a, b);
                const std::uint32_t lb = labels[b];
                const std::uint32_t lc = labels[c];
                const bool fused = tensor.coefficient(la, lb, lc);
                if (!fused || !class_ok(a, b, c)) {
                    local.violation = PairViolation{a, b, fused};
                    std::uint64_t seen = cutoff.load(std::memory_order_relaxed);
                    while (a < seen && !cutoff.compare_exchange_weak(seen, a, std::memory_order_relaxed)) {
                    }
                    return;
                }
                local.realized.insert(la, lb, lc);
                local.realized.insert(lb, la, lc);
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    PairScan out{std::nullopt, TripleSet(n)};
    for (auto& local : locals) {
        if (local.violation &&
            (!out.violation || std::pair(local.violation->first, local.violation->second) <
                                   std::pair(out.violation->first, out.violation->second))) {
            out.violation = local.violation;
        }
        out.realized.merge(local.realized);
    }
    return out;
}

/// Every realized triple, with no early exit. Feeds the partition algebra.
template <class Add>
TripleSet realized_triples(std::uint64_t order, LabelSpan labels, std::size_t n, const Add& add) {
    TripleSet out(n);
    for (std::uint64_t a = 0; a < order; ++a) {
        for (std::uint64_t b = a; b < order; ++b) {
            const std::uint64_t c = add(a, b);
            out.insert(labels[a], labels[b], labels[c]);
            out.insert(labels[b], labels[a], labels[c]);
        }
    }
    return out;
}

/// Walks admissible raw-label triples in lexicographic order of
/// ((m1,n1),(m2,n2),(m3,n3)) and returns the first whose sectors were
/// never realized.
std::optional<std::array<KacLabel, 3>> first_uncovered_triple(const FusionTensor& tensor, const TripleSet& realized,
                                                              std::uint64_t& triples_checked);

/// Number of unordered pairs up to and including (a, b) in scan order.
inline std::uint64_t pairs_through(std::uint64_t order, std::uint64_t a, std::uint64_t b) {
    // rows 0..a-1 contribute order - row pairs each
    const std::uint64_t full_rows = a * order - a * (a - 1) / 2;
    return full_rows + (b - a) + 1;
}

inline std::uint64_t all_pairs(std::uint64_t order) { return order * (order + 1) / 2; }

}  // namespace mmfusion::detail
