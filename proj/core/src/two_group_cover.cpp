#include "mmfusion/two_group_cover.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cover_check.hpp"
#include "mmfusion/errors.hpp"

namespace mmfusion {

namespace {

std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

int checked_rank(const ModelParams& params) {
    const int r = params.p() + params.q() - 4;
    if (r > kMaxTwoGroupRank) {
        throw CapacityError("r = p+q-4 = " + std::to_string(r) + " exceeds the word budget of " +
                            std::to_string(kMaxTwoGroupRank));
    }
    return r;
}

// All subsets of `size` bits with exactly `weight` set, ascending.
std::vector<std::uint64_t> fixed_weight_words(int size, int weight) {
    std::vector<std::uint64_t> out;
    if (weight < 0 || weight > size) return out;
    if (weight == 0) return {0};
    const std::uint64_t limit = std::uint64_t{1} << size;
    for (std::uint64_t w = low_mask(weight); w < limit;) {
        out.push_back(w);
        // Gosper's hack: next word with the same popcount
        const std::uint64_t c = w & (~w + 1);
        const std::uint64_t r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
    return out;
}

void require_orbit_label(const GroupContext& ctx, Part part, int w) {
    const int size = ctx.part_size(part);
    if (w < 1 || w > size + 1) {
        throw ArgumentError("orbit label " + std::to_string(w) + " outside 1.." + std::to_string(size + 1) +
                            " for part " + (part == Part::A ? "A" : "B"));
    }
}

void require_materializable(const GroupContext& ctx) {
    if (ctx.rank() < 1) throw ArgumentError("quotient H/I needs r >= 1");
    if (ctx.rank() > kMaxMaterializedRank) {
        throw CapacityError("2^(r-1) cosets with r = " + std::to_string(ctx.rank()) +
                            " exceed the materialization limit r <= " + std::to_string(kMaxMaterializedRank));
    }
}

std::vector<std::int64_t> g_coordinates(std::uint64_t rep, int rank) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(rank - 1));
    for (int i = 0; i + 1 < rank; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>((rep >> i) & 1U);
    return out;
}

}  // namespace

GroupContext::GroupContext(const ModelParams& params)
    : params_(params),
      rank_(checked_rank(params)),
      a_mask_(low_mask(params.p() - 2)),
      b_mask_(low_mask(params.q() - 2) << (params.p() - 2)) {}

ClassLabel class_of(const GroupContext& ctx, const BitVector& x) {
    if (x.width() != ctx.rank()) {
        throw ArgumentError("element width " + std::to_string(x.width()) + " differs from r = " +
                            std::to_string(ctx.rank()));
    }
    return {std::popcount(x.bits() & ctx.part_mask(Part::A)) + 1, std::popcount(x.bits() & ctx.part_mask(Part::B)) + 1};
}

std::vector<BitVector> class_members(const GroupContext& ctx, ClassLabel label) {
    if (!in_kac_range(ctx.params(), label)) {
        throw RangeError("class label (" + std::to_string(label.m) + "," + std::to_string(label.n) +
                         ") outside the Kac range");
    }
    const auto a_words = fixed_weight_words(ctx.part_size(Part::A), label.m - 1);
    const auto b_words = fixed_weight_words(ctx.part_size(Part::B), label.n - 1);
    const int shift = ctx.part_offset(Part::B);
    std::vector<BitVector> out;
    out.reserve(a_words.size() * b_words.size());
    // b occupies the high bits, so iterating b outermost keeps the output ascending
    for (const auto b : b_words) {
        for (const auto a : a_words) out.emplace_back(a | (b << shift), ctx.rank());
    }
    return out;
}

std::vector<BitVector> orbit_sum_set(const GroupContext& ctx, Part part, int w1, int w2) {
    require_orbit_label(ctx, part, w1);
    require_orbit_label(ctx, part, w2);
    const int size = ctx.part_size(part);
    const int shift = ctx.part_offset(part);
    const auto first = fixed_weight_words(size, w1 - 1);
    const auto second = fixed_weight_words(size, w2 - 1);
    std::vector<std::uint64_t> sums;
    sums.reserve(first.size() * second.size());
    for (const auto x : first) {
        for (const auto y : second) sums.push_back(x ^ y);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    std::vector<BitVector> out;
    out.reserve(sums.size());
    for (const auto s : sums) out.emplace_back(s << shift, ctx.rank());
    return out;
}

std::vector<int> orbit_sum_classes(const GroupContext& ctx, Part part, int w1, int w2) {
    std::vector<int> out;
    for (const auto& v : orbit_sum_set(ctx, part, w1, w2)) out.push_back(v.weight() + 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Coset coset_of(const GroupContext& ctx, const BitVector& x) {
    if (x.width() != ctx.rank()) {
        throw ArgumentError("element width " + std::to_string(x.width()) + " differs from r = " +
                            std::to_string(ctx.rank()));
    }
    const BitVector other = x + ctx.all_ones();
    return Coset{other.bits() < x.bits() ? other : x};
}

std::vector<Coset> quotient_cosets(const GroupContext& ctx) {
    require_materializable(ctx);
    const std::uint64_t count = std::uint64_t{1} << (ctx.rank() - 1);
    std::vector<Coset> out;
    out.reserve(count);
    for (std::uint64_t g = 0; g < count; ++g) out.push_back(Coset{BitVector(g, ctx.rank())});
    return out;
}

CoverMap::CoverMap(const GroupContext& ctx, std::vector<std::uint32_t> assignment)
    : ctx_(ctx), sectors_(mmfusion::sectors(ctx.params())), assignment_(std::move(assignment)) {
    if (assignment_.size() != (std::uint64_t{1} << (ctx.rank() - 1))) {
        throw ArgumentError("cover map needs one sector per coset (" +
                            std::to_string(std::uint64_t{1} << (ctx.rank() - 1)) + "), got " +
                            std::to_string(assignment_.size()));
    }
    respects_classes_ = true;
    for (std::uint64_t g = 0; g < assignment_.size(); ++g) {
        if (assignment_[g] >= sectors_.size()) {
            throw ArgumentError("coset " + std::to_string(g) + " assigned unknown sector " +
                                std::to_string(assignment_[g]));
        }
        if (respects_classes_) {
            const ClassLabel label = class_of(ctx_, BitVector(g, ctx_.rank()));
            respects_classes_ = sector_index(ctx_.params(), label) == assignment_[g];
        }
    }
}

CoverMap CoverMap::canonical(const GroupContext& ctx) {
    require_materializable(ctx);
    const std::uint64_t count = std::uint64_t{1} << (ctx.rank() - 1);
    std::vector<std::uint32_t> assignment(count);
    for (std::uint64_t g = 0; g < count; ++g) {
        assignment[g] =
            static_cast<std::uint32_t>(sector_index(ctx.params(), class_of(ctx, BitVector(g, ctx.rank()))));
    }
    return CoverMap(ctx, std::move(assignment));
}

CoverMap CoverMap::from_assignment(const GroupContext& ctx, std::vector<std::uint32_t> assignment) {
    require_materializable(ctx);
    return CoverMap(ctx, std::move(assignment));
}

Sector phi(const CoverMap& cm, const Coset& g) {
    const GroupContext& ctx = cm.context();
    const Coset canonical = coset_of(ctx, g.representative);
    const Sector& assigned = cm.sectors()[cm.assignment()[canonical.representative.bits()]];
    if (cm.respects_classes()) {
        const Sector lhs = canonicalize(ctx.params(), class_of(ctx, canonical.representative));
        const Sector rhs = canonicalize(ctx.params(), class_of(ctx, canonical.representative + ctx.all_ones()));
        if (lhs != assigned || rhs != assigned) {
            throw std::logic_error("coset members " + canonical.representative.to_string() +
                                   " and its complement land in different sectors");
        }
    }
    return assigned;
}

CoverCertificate verify_cover(const CoverMap& cm, const FusionTensor& tensor, unsigned threads) {
    const GroupContext& ctx = cm.context();
    if (!(tensor.model() == ctx.params())) {
        throw ArgumentError("fusion tensor is for a different model than the cover map");
    }
    const int rank = ctx.rank();
    const std::uint64_t order = cm.coset_count();
    auto add = [](std::uint64_t a, std::uint64_t b) { return a ^ b; };

    CoverCertificate cert;
    cert.group_factors.assign(static_cast<std::size_t>(rank - 1), 2);

    detail::PairScan scan{std::nullopt, detail::TripleSet(tensor.size())};
    std::vector<std::uint8_t> class_m;
    std::vector<std::uint8_t> class_n;
    if (cm.respects_classes()) {
        class_m.resize(order);
        class_n.resize(order);
        for (std::uint64_t g = 0; g < order; ++g) {
            const ClassLabel label = class_of(ctx, BitVector(g, rank));
            class_m[g] = static_cast<std::uint8_t>(label.m);
            class_n[g] = static_cast<std::uint8_t>(label.n);
        }
        const int p = ctx.params().p();
        const int q = ctx.params().q();
        // p-1, q-1 < 64 here; small lookup tables beat recomputing the predicate
        const auto p_table = [&] {
            std::vector<std::uint8_t> t(static_cast<std::size_t>(p * p * p));
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    for (int c = 0; c < p; ++c) t[static_cast<std::size_t>((a * p + b) * p + c)] = is_p_admissible(p, a, b, c);
            return t;
        }();
        const auto q_table = [&] {
            std::vector<std::uint8_t> t(static_cast<std::size_t>(q * q * q));
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    for (int c = 0; c < q; ++c) t[static_cast<std::size_t>((a * q + b) * q + c)] = is_p_admissible(q, a, b, c);
            return t;
        }();
        auto class_ok = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
            return p_table[static_cast<std::size_t>((class_m[a] * p + class_m[b]) * p + class_m[c])] &&
                   q_table[static_cast<std::size_t>((class_n[a] * q + class_n[b]) * q + class_n[c])];
        };
        scan = detail::scan_pairs(order, cm.assignment(), tensor, add, class_ok, threads);
    } else {
        scan = detail::scan_pairs(order, cm.assignment(), tensor, add, detail::NoClassCheck{}, threads);
    }

    if (scan.violation) {
        const auto [a, b, on_class] = *scan.violation;
        const std::uint64_t c = a ^ b;
        SumWitness w{g_coordinates(a, rank),
                     g_coordinates(b, rank),
                     g_coordinates(c, rank),
                     {cm.assignment()[a], cm.assignment()[b], cm.assignment()[c]},
                     std::nullopt};
        if (on_class) {
            w.class_labels = std::array<KacLabel, 3>{ClassLabel{class_m[a], class_n[a]}, ClassLabel{class_m[b], class_n[b]},
                                                     ClassLabel{class_m[c], class_n[c]}};
        }
        cert.verdict = Verdict::Fail;
        cert.stats.pairs_checked = detail::pairs_through(order, a, b);
        cert.witness = std::move(w);
        return cert;
    }
    cert.stats.pairs_checked = detail::all_pairs(order);
    if (auto missing = detail::first_uncovered_triple(tensor, scan.realized, cert.stats.triples_checked)) {
        cert.verdict = Verdict::Fail;
        cert.witness = UncoveredTriple{*missing};
    }
    return cert;
}

PartitionAlgebra::PartitionAlgebra(std::size_t dimension, std::vector<std::uint8_t> constants)
    : n_(dimension), constants_(std::move(constants)) {
    if (constants_.size() != n_ * n_ * n_) throw ArgumentError("partition algebra needs N^3 structure constants");
}

std::vector<std::size_t> PartitionAlgebra::product(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_; ++k) {
        if (constant(i, j, k)) out.push_back(k);
    }
    return out;
}

PartitionAlgebra block_algebra(const CoverMap& cm) {
    const std::size_t n = cm.sectors().size();
    const auto realized = detail::realized_triples(cm.coset_count(), cm.assignment(), n,
                                                   [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
    std::vector<std::uint8_t> constants(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) constants[(i * n + j) * n + k] = realized.contains(i, j, k);
    return PartitionAlgebra(n, std::move(constants));
}

PartitionAlgebra partition_algebra(const CoverMap& cm) {
    const auto& assignment = cm.assignment();
    if (assignment[0] != 0) {
        throw StructuralError("identity block P_1 does not contain 0: coset 0 is labeled " +
                              cm.sectors()[assignment[0]].name());
    }
    for (std::uint64_t g = 1; g < assignment.size(); ++g) {
        if (assignment[g] == 0) {
            throw StructuralError("identity block P_1 must be {0} but also contains coset " +
                                  BitVector(g, cm.context().rank()).to_string());
        }
    }
    return block_algebra(cm);
}

std::optional<std::array<std::size_t, 3>> first_structure_mismatch(const PartitionAlgebra& w,
                                                                   const VerlindeAlgebra& v) {
    const std::size_t n = w.dimension();
    if (n != v.dimension()) {
        throw ArgumentError("partition algebra has dimension " + std::to_string(n) + ", Verlinde algebra " +
                            std::to_string(v.dimension()));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (w.constant(i, j, k) != v.tensor().coefficient(i, j, k)) return std::array{i, j, k};
    return std::nullopt;
}

bool is_isomorphic_to_verlinde(const PartitionAlgebra& w, const VerlindeAlgebra& v) {
    return !first_structure_mismatch(w, v).has_value();
}

LabeledGroup as_labeled_group(const CoverMap& cm) {
    return LabeledGroup(AbelianGroupSpec::elementary_two_group(cm.context().rank() - 1), cm.assignment());
}

}  // namespace mmfusion
