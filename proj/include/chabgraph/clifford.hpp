#pragma once

#include <vector>

#include "chabgraph/augmented.hpp"

namespace chabgraph {

/// Constructive upper bound on the section rank of K − D for effective D:
/// a blocking multidegree Q such that after imposing Q in twist general
/// position, every twist of K − D loses all sections on some component.
/// The certified bound is deg(Q) − 1.
struct CliffordCertificate {
    enum class Branch { negative_degree, graph_clifford };

    struct Witness {
        Twist twist;
        int dead_vertex; // first component with no sections left
    };

    Divisor blocking;               // Q
    i64 bound;                      // deg(Q) − 1
    Branch branch;                  // which construction produced Q
    std::vector<Witness> witnesses; // one entry per enumerated twist
};

/// Runs the two-case construction on K − D (K = canonical_multidegree) and
/// verifies the result by exhausting the twist set under the optimistic
/// oracle. Verification failure throws InternalError: the construction is
/// proven to succeed, so a failure is an implementation bug.
CliffordCertificate clifford_certificate(const AugmentedCurve& ac, const Divisor& d);

} // namespace chabgraph
