#pragma once

#include <optional>

#include "chabgraph/divisor.hpp"
#include "chabgraph/multigraph.hpp"

namespace chabgraph {

/// The unique canonical representative of a linear equivalence class relative
/// to a base vertex: non-negative away from the base, and no nonempty vertex
/// set avoiding the base can fire without someone going negative.
struct ReducedDivisor {
    Divisor divisor;
    int base_vertex;
};

/// Reduces D to its q-reduced form by repeated set-firings driven by Dhar's
/// burning algorithm. Idempotent; the result differs from D by a Laplacian
/// image. q is a vertex index of g.
ReducedDivisor q_reduce(const Multigraph& g, const Divisor& d, int q);

/// True iff D1 − D2 is a Laplacian image (equivalently: same degree and equal
/// q-reduced forms at the first vertex).
bool is_linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2);

/// The twist φ with d1 + Δφ = d2, if the divisors are linearly equivalent.
std::optional<Twist> equivalence_twist(const Multigraph& g, const Divisor& d1, const Divisor& d2);

namespace detail {

// q-reduction that also reports the accumulated firing function:
// result.divisor = d + Δ(result.twist values).
struct ReduceWithTwist {
    Divisor divisor;
    std::vector<i64> fired;
};
ReduceWithTwist q_reduce_with_twist(const Multigraph& g, const Divisor& d, int q);

} // namespace detail
} // namespace chabgraph
