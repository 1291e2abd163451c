#pragma once

#include "chabgraph/divisor.hpp"
#include "chabgraph/multigraph.hpp"

namespace chabgraph {

/// Baker–Norine rank of D: −1 if D is not equivalent to an effective divisor,
/// otherwise the largest r such that D − E stays equivalent to an effective
/// divisor for every effective E of degree r.
///
/// Cost model: the search quantifies over all effective multidegrees of each
/// degree up to rank(D)+1 and q-reduces each candidate, so it is exponential
/// in the rank. Fine at desk scale; do not feed it huge degrees on big graphs.
i64 graph_divisor_rank(const Multigraph& g, const Divisor& d);

/// r(D) − r(K_Γ − D) − (deg D + 1 − g(Γ)). Zero for every input.
i64 graph_rr_defect(const Multigraph& g, const Divisor& d);

struct CliffordCheck {
    bool applicable; // D effective and r(K_Γ − D) >= 0
    bool holds;      // vacuously true when not applicable
};

/// Checks rank(D) <= deg(D)/2 (as rationals) for effective special D.
CliffordCheck graph_clifford_check(const Multigraph& g, const Divisor& d);

} // namespace chabgraph
