#pragma once

#include <random>

#include "chabgraph/augmented.hpp"

namespace chabgraph {

/// Knobs for the seeded instance family used by audits and property sweeps.
struct FamilyParams {
    int max_vertices = 4;
    int max_extra_edges = 3; // on top of a random spanning tree
    i64 max_genus = 2;       // per vertex
    i64 coeff_bound = 3;     // divisor coefficients drawn from [-b, b]
    i64 max_abs_degree = -1; // resample divisors outside this band; -1 = off
    bool totally_degenerate = false;
    bool allow_loops = true; // extra edges may be loops (self-nodes)
};

struct FamilyInstance {
    AugmentedCurve curve;
    Divisor divisor;
};

/// Draws a connected multigraph (random spanning tree plus extra edges and
/// loops), per-vertex genera, and a divisor. Deterministic in the rng state.
FamilyInstance random_instance(std::mt19937_64& rng, const FamilyParams& params);

} // namespace chabgraph
