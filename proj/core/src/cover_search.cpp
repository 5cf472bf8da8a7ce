#include "mmfusion/cover_search.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "cover_check.hpp"
#include "mmfusion/errors.hpp"

namespace mmfusion {

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (const auto f : factors_) {
        if (f < 2) throw ArgumentError("invariant factor " + std::to_string(f) + " must be >= 2");
        if (order_ > kMaxGroupOrder / static_cast<std::uint64_t>(f)) {
            throw CapacityError("group order exceeds limit of " + std::to_string(kMaxGroupOrder));
        }
        order_ *= static_cast<std::uint64_t>(f);
    }
}

AbelianGroupSpec AbelianGroupSpec::cyclic(std::int64_t order) {
    if (order < 1) throw ArgumentError("cyclic group order must be >= 1");
    if (order == 1) return AbelianGroupSpec{};
    return AbelianGroupSpec({order});
}

AbelianGroupSpec AbelianGroupSpec::elementary_two_group(int rank) {
    if (rank < 0) throw ArgumentError("rank must be >= 0");
    return AbelianGroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 2));
}

std::uint64_t AbelianGroupSpec::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (const auto f : factors_) {
        const auto k = static_cast<std::uint64_t>(f);
        const std::uint64_t digit = (a % k + b % k) % k;
        out += digit * stride;
        stride *= k;
        a /= k;
        b /= k;
    }
    return out;
}

std::uint64_t AbelianGroupSpec::negate(std::uint64_t a) const noexcept {
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (const auto f : factors_) {
        const auto k = static_cast<std::uint64_t>(f);
        out += ((k - a % k) % k) * stride;
        stride *= k;
        a /= k;
    }
    return out;
}

std::vector<std::int64_t> AbelianGroupSpec::coordinates(std::uint64_t index) const {
    if (index >= order_) throw RangeError("group element index " + std::to_string(index) + " out of range");
    std::vector<std::int64_t> out;
    out.reserve(factors_.size());
    for (const auto f : factors_) {
        out.push_back(static_cast<std::int64_t>(index % static_cast<std::uint64_t>(f)));
        index /= static_cast<std::uint64_t>(f);
    }
    return out;
}

std::uint64_t AbelianGroupSpec::index_of(std::span<const std::int64_t> coordinates) const {
    if (coordinates.size() != factors_.size()) {
        throw RangeError("element has " + std::to_string(coordinates.size()) + " coordinates, group has " +
                         std::to_string(factors_.size()) + " factors");
    }
    std::uint64_t out = 0;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coordinates[i] < 0 || coordinates[i] >= factors_[i]) {
            throw RangeError("coordinate " + std::to_string(coordinates[i]) + " outside Z" +
                             std::to_string(factors_[i]));
        }
        out += static_cast<std::uint64_t>(coordinates[i]) * stride;
        stride *= static_cast<std::uint64_t>(factors_[i]);
    }
    return out;
}

std::string AbelianGroupSpec::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += "x";
        out += "Z" + std::to_string(factors_[i]);
    }
    return out;
}

LabeledGroup::LabeledGroup(AbelianGroupSpec spec, std::vector<std::uint32_t> labels)
    : spec_(std::move(spec)), labels_(std::move(labels)) {
    if (labels_.size() != spec_.order()) {
        throw ArgumentError("labeling has " + std::to_string(labels_.size()) + " entries for a group of order " +
                            std::to_string(spec_.order()));
    }
    if (labels_[0] != 0) throw ArgumentError("identity element must carry the (1,1) sector");
}

namespace {

void require_labels_in_model(const LabeledGroup& lg, const FusionTensor& tensor) {
    for (std::uint64_t g = 0; g < lg.labels().size(); ++g) {
        if (lg.labels()[g] >= tensor.size()) {
            throw ArgumentError("element " + std::to_string(g) + " has sector index " +
                                std::to_string(lg.labels()[g]) + " but the model has " +
                                std::to_string(tensor.size()) + " sectors");
        }
    }
}

}  // namespace

CoverCertificate verify_abelian_cover(const LabeledGroup& lg, const FusionTensor& tensor, unsigned threads) {
    require_labels_in_model(lg, tensor);
    const AbelianGroupSpec& spec = lg.spec();
    const std::uint64_t order = spec.order();

    // Single-factor groups are the common case; keep their addition cheap.
    const bool cyclic = spec.factors().size() == 1;
    const std::uint64_t k = cyclic ? static_cast<std::uint64_t>(spec.factors()[0]) : 0;
    auto add = [&](std::uint64_t a, std::uint64_t b) {
        if (cyclic) {
            const std::uint64_t s = a + b;
            return s >= k ? s - k : s;
        }
        return spec.add(a, b);
    };

    CoverCertificate cert;
    cert.group_factors = spec.factors();
    auto scan = detail::scan_pairs(order, lg.labels(), tensor, add, detail::NoClassCheck{}, threads);
    if (scan.violation) {
        const auto [a, b, on_class] = *scan.violation;
        const std::uint64_t c = add(a, b);
        cert.verdict = Verdict::Fail;
        cert.stats.pairs_checked = detail::pairs_through(order, a, b);
        cert.witness = SumWitness{spec.coordinates(a), spec.coordinates(b), spec.coordinates(c),
                                  {lg.label(a), lg.label(b), lg.label(c)}, std::nullopt};
        return cert;
    }
    cert.stats.pairs_checked = detail::all_pairs(order);
    if (auto missing = detail::first_uncovered_triple(tensor, scan.realized, cert.stats.triples_checked)) {
        cert.verdict = Verdict::Fail;
        cert.witness = UncoveredTriple{*missing};
    }
    return cert;
}

bool witness_confirms_failure(const LabeledGroup& lg, const FusionTensor& tensor, const CoverCertificate& cert) {
    if (cert.passed()) return false;
    const AbelianGroupSpec& spec = lg.spec();
    if (cert.group_factors != spec.factors()) return false;
    if (const auto* w = std::get_if<SumWitness>(&cert.witness)) {
        const std::uint64_t a = spec.index_of(w->first);
        const std::uint64_t b = spec.index_of(w->second);
        const std::uint64_t c = spec.index_of(w->sum);
        if (spec.add(a, b) != c) return false;
        const std::array<std::size_t, 3> sectors{lg.label(a), lg.label(b), lg.label(c)};
        if (sectors != w->sectors) return false;
        if (w->class_labels) {
            const auto& t = *w->class_labels;
            return !is_pq_admissible(tensor.model(), t[0], t[1], t[2]);
        }
        return !tensor.coefficient(sectors[0], sectors[1], sectors[2]);
    }
    if (const auto* w = std::get_if<UncoveredTriple>(&cert.witness)) {
        const auto& t = w->labels;
        if (!is_pq_admissible(tensor.model(), t[0], t[1], t[2])) return false;
        const std::size_t s1 = tensor.index_of(t[0]);
        const std::size_t s2 = tensor.index_of(t[1]);
        const std::size_t s3 = tensor.index_of(t[2]);
        for (std::uint64_t a = 0; a < spec.order(); ++a) {
            if (lg.label(a) != s1) continue;
            for (std::uint64_t b = 0; b < spec.order(); ++b) {
                if (lg.label(b) == s2 && lg.label(spec.add(a, b)) == s3) return false;
            }
        }
        return true;
    }
    return false;
}

std::vector<int> multiplicity_profile(const FusionTensor& tensor) {
    const std::size_t n = tensor.size();
    std::vector<int> out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            int count = 0;
            for (std::size_t j = 0; j < n; ++j) count += tensor.coefficient(i, j, k) ? 1 : 0;
            out[k] = std::max(out[k], count);
        }
    }
    return out;
}

namespace {

// Depth-first labeling of Z_k, elements assigned in ascending order.
class CyclicSearch {
public:
    CyclicSearch(const FusionTensor& tensor, std::uint32_t order)
        : tensor_(tensor), order_(order), labels_(order, 0), uses_(tensor.size(), 0) {
        uses_[0] = 1;
        distinct_ = 1;
    }

    // Explores every completion with element 1 labeled first_label
    // (or the single-element group when order is 1).
    void run_branch(std::uint32_t first_label) {
        if (order_ == 1) {
            finish();
            return;
        }
        try_label(1, first_label);
    }

    std::vector<LabeledGroup>& found() { return found_; }

private:
    bool consistent(std::uint32_t x) const {
        const std::uint32_t lx = labels_[x];
        for (std::uint32_t b = 0; b <= x; ++b) {
            const std::uint32_t c = (x + b) % order_;
            if (c <= x && !tensor_.coefficient(lx, labels_[b], labels_[c])) return false;
        }
        for (std::uint32_t a = 0; a <= x; ++a) {
            const std::uint32_t b = (x + order_ - a) % order_;
            if (b <= x && !tensor_.coefficient(labels_[a], labels_[b], lx)) return false;
        }
        return true;
    }

    void try_label(std::uint32_t x, std::uint32_t label) {
        labels_[x] = label;
        if (uses_[label]++ == 0) ++distinct_;
        const std::size_t missing = tensor_.size() - distinct_;
        const std::size_t remaining = order_ - 1 - x;
        if (missing <= remaining && consistent(x)) {
            if (x + 1 == order_) {
                finish();
            } else {
                for (std::uint32_t s = 0; s < tensor_.size(); ++s) try_label(x + 1, s);
            }
        }
        if (--uses_[label] == 0) --distinct_;
    }

    void finish() {
        // keep the smaller of L and L o (x -> -x)
        for (std::uint32_t x = 1; x < order_; ++x) {
            const std::uint32_t mirrored = labels_[order_ - x];
            if (labels_[x] != mirrored) {
                if (labels_[x] > mirrored) return;
                break;
            }
        }
        LabeledGroup lg(AbelianGroupSpec::cyclic(order_), labels_);
        if (verify_abelian_cover(lg, tensor_).passed()) found_.push_back(std::move(lg));
    }

    const FusionTensor& tensor_;
    std::uint32_t order_;
    std::vector<std::uint32_t> labels_;
    std::vector<std::uint32_t> uses_;
    std::size_t distinct_ = 0;
    std::vector<LabeledGroup> found_;
};

}  // namespace

std::vector<LabeledGroup> search_cyclic_covers(const FusionTensor& tensor, std::int64_t max_order,
                                               const SearchOptions& options) {
    if (max_order < 1) throw ArgumentError("max_order must be >= 1");
    if (max_order > options.order_budget) {
        throw CapacityError("max_order " + std::to_string(max_order) + " exceeds search budget " +
                            std::to_string(options.order_budget));
    }
    if (static_cast<std::uint64_t>(max_order) > kMaxGroupOrder) {
        throw CapacityError("max_order exceeds group order limit");
    }
    std::int64_t min_order = 1;
    if (options.profile_bound) {
        const auto profile = multiplicity_profile(tensor);
        min_order = std::accumulate(profile.begin(), profile.end(), std::int64_t{0});
    }

    std::vector<LabeledGroup> out;
    for (std::int64_t k = std::max<std::int64_t>(min_order, 1); k <= max_order; ++k) {
        const auto order = static_cast<std::uint32_t>(k);
        // element 1 labels are independent top-level branches
        const std::uint32_t branches = order == 1 ? 1 : static_cast<std::uint32_t>(tensor.size());
        std::vector<std::vector<LabeledGroup>> per_branch(branches);
        const unsigned workers = std::max(1U, std::min(options.threads, branches));
        auto work = [&](unsigned w) {
            for (std::uint32_t s = w; s < branches; s += workers) {
                CyclicSearch search(tensor, order);
                search.run_branch(s);
                per_branch[s] = std::move(search.found());
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        }
        // branches are in ascending label order, so concatenation is sorted
        for (auto& found : per_branch) {
            for (auto& lg : found) out.push_back(std::move(lg));
        }
    }
    return out;
}

}  // namespace mmfusion
