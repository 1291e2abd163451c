#include "chabgraph/graph_ops.hpp"

#include "chabgraph/errors.hpp"

namespace chabgraph {

Divisor laplacian(const Multigraph& g, const Twist& phi) {
    if (phi.size() != g.size()) {
        throw InputError("twist is not defined on all vertices of the graph");
    }
    Divisor out(g.size());
    for (const auto& [u, w] : g.edges()) {
        if (u == w) {
            continue; // loops contribute nothing
        }
        const i64 diff = checked::sub(phi[w], phi[u]);
        out[u] = checked::add(out[u], diff);
        out[w] = checked::sub(out[w], diff);
    }
    return out;
}

Divisor canonical_divisor(const Multigraph& g) {
    Divisor out(g.size());
    for (int v = 0; v < g.size(); ++v) {
        out[v] = checked::sub(g.valence(v), 2);
    }
    return out;
}

i64 graph_genus(const Multigraph& g) {
    return checked::add(checked::sub(g.edge_count(), g.size()), 1);
}

bool multidegree_identity_check(const Multigraph& g, const Twist& phi) {
    const Divisor via_edges = laplacian(g, phi);

    // Independent route: per-vertex restriction formula over the
    // multiplicity matrix.
    Divisor via_matrix(g.size());
    for (int v = 0; v < g.size(); ++v) {
        i64 sum = 0;
        for (int w = 0; w < g.size(); ++w) {
            if (w == v) {
                continue;
            }
            sum = checked::add(sum, checked::mul(g.multiplicity(v, w), checked::sub(phi[w], phi[v])));
        }
        via_matrix[v] = sum;
    }

    return via_edges == via_matrix && via_edges.degree() == 0;
}

} // namespace chabgraph
