#include "cover_check.hpp"

namespace mmfusion::detail {

std::optional<std::array<KacLabel, 3>> first_uncovered_triple(const FusionTensor& tensor, const TripleSet& realized,
                                                              std::uint64_t& triples_checked) {
    const ModelParams& params = tensor.model();
    const int p = params.p();
    const int q = params.q();
    for (int m1 = 1; m1 < p; ++m1) {
        for (int n1 = 1; n1 < q; ++n1) {
            const std::size_t s1 = tensor.index_of({m1, n1});
            for (int m2 = 1; m2 < p; ++m2) {
                const auto m3s = admissible_range(p, std::max(m1, m2), std::min(m1, m2));
                for (int n2 = 1; n2 < q; ++n2) {
                    const std::size_t s2 = tensor.index_of({m2, n2});
                    const auto n3s = admissible_range(q, std::max(n1, n2), std::min(n1, n2));
                    for (const int m3 : m3s) {
                        for (const int n3 : n3s) {
                            ++triples_checked;
                            if (!realized.contains(s1, s2, tensor.index_of({m3, n3}))) {
                                return std::array<KacLabel, 3>{KacLabel{m1, n1}, KacLabel{m2, n2}, KacLabel{m3, n3}};
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace mmfusion::detail
