#pragma once

#include "chabgraph/divisor.hpp"
#include "chabgraph/multigraph.hpp"

namespace chabgraph {

/// Laplacian image of a twist: (Δφ)(v) = Σ_{e=wv} (φ(w) − φ(v)), summing over
/// the edges at v. Loops contribute nothing. The result always has degree 0.
Divisor laplacian(const Multigraph& g, const Twist& phi);

/// Canonical divisor of the bare graph: valence(v) − 2 at each vertex, loops
/// counting twice. Its degree is 2·graph_genus − 2.
Divisor canonical_divisor(const Multigraph& g);

/// First Betti number |E| − |V| + 1 (the graph is connected by construction).
i64 graph_genus(const Multigraph& g);

/// Self-test hook: recomputes Δφ vertex-by-vertex from the multiplicity
/// matrix, compares with laplacian(), and checks the total degree is 0.
bool multidegree_identity_check(const Multigraph& g, const Twist& phi);

} // namespace chabgraph
