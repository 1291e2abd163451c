#include "chabgraph/rank.hpp"

#include "chabgraph/errors.hpp"
#include "chabgraph/graph_ops.hpp"
#include "chabgraph/reduction.hpp"

namespace chabgraph {

namespace {

// A q-reduced divisor is equivalent to an effective one iff its coefficient
// at the base vertex is non-negative (the rest are non-negative already).
bool reduced_is_effective(const Multigraph& g, const Divisor& d) {
    return q_reduce(g, d, 0).divisor[0] >= 0;
}

} // namespace

i64 graph_divisor_rank(const Multigraph& g, const Divisor& d) {
    if (d.degree() < 0) {
        return -1;
    }
    const Divisor reduced = q_reduce(g, d, 0).divisor;
    if (reduced[0] < 0) {
        return -1;
    }
    // rank >= r iff every effective multidegree E of degree r leaves D − E
    // equivalent to an effective divisor. The loop is bounded: subtracting
    // deg(D)+1 points always drops the class below degree 0.
    for (i64 r = 1;; ++r) {
        const bool all_pass = for_each_effective_multidegree(
            g.size(), r, [&](const std::vector<i64>& e) {
                Divisor remainder = reduced;
                for (int v = 0; v < g.size(); ++v) {
                    remainder[v] = checked::sub(remainder[v], e[static_cast<size_t>(v)]);
                }
                return reduced_is_effective(g, remainder);
            });
        if (!all_pass) {
            return r - 1;
        }
    }
}

i64 graph_rr_defect(const Multigraph& g, const Divisor& d) {
    const Divisor k = canonical_divisor(g);
    const i64 rank_d = graph_divisor_rank(g, d);
    const i64 rank_kd = graph_divisor_rank(g, k - d);
    const i64 euler = checked::add(checked::sub(d.degree(), graph_genus(g)), 1);
    return checked::sub(checked::sub(rank_d, rank_kd), euler);
}

CliffordCheck graph_clifford_check(const Multigraph& g, const Divisor& d) {
    const Divisor k = canonical_divisor(g);
    const bool special = d.is_effective() && graph_divisor_rank(g, k - d) >= 0;
    if (!special) {
        return CliffordCheck{false, true};
    }
    const i64 rank = graph_divisor_rank(g, d);
    return CliffordCheck{true, checked::mul(2, rank) <= d.degree()};
}

} // namespace chabgraph
