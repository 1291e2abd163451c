#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chabgraph/checked.hpp"

namespace chabgraph {

/// A prime p together with the absolute ramification index e of the local
/// field. Primality of p is checked at construction.
struct LocalArithmetic {
    LocalArithmetic(i64 p, i64 e);

    i64 p;
    i64 e;
};

/// p-adic valuation of n: the largest k with p^k | n. Requires n >= 1.
i64 vp(i64 n, i64 p);

/// Newton-polygon correction term:
///   δ(n) = max{ d >= 0 : e·vp(n+1) + d <= e·vp(n+d+1) }.
/// The scan cap is derived from vp(x) <= log_p(x), so the function terminates
/// for every e, including e >= p − 1.
i64 delta(const LocalArithmetic& local, i64 n);

/// Upper bound on the number of rational points in one residue class whose
/// chosen differential vanishes to order n at the reduction: 1 + n + δ(n).
i64 residue_class_bound(const LocalArithmetic& local, i64 n);

struct ChabautyInputs {
    i64 g;       // genus, >= 2
    i64 r;       // Mordell–Weil rank, >= 0
    LocalArithmetic local;
    i64 n_smooth; // number of smooth residue points
    std::optional<std::vector<i64>> orders; // per-class vanishing orders
};

enum class BoundTheorem { stoll_main, coleman_LT, general_delta };

std::string to_string(BoundTheorem t);

struct HypothesisCheck {
    std::string condition;
    bool pass;
};

struct ChabautyReport {
    i64 bound;
    BoundTheorem theorem;
    std::vector<HypothesisCheck> hypotheses_checked;
    // Present when per-class vanishing orders were supplied:
    // n_smooth + Σ (n_i + δ(n_i)).
    std::optional<i64> orders_bound;
};

/// Evaluates every candidate point-count bound whose hypotheses hold and
/// returns the smallest:
///   stoll_main     (p > 2r+2, e = 1):   n_smooth + 2r
///   coleman_LT     (p > 2g+e−1):        n_smooth + 2g − 2
///   general_delta  (e < p−1):           n_smooth + 2r + e·⌊2r/(p−e−1)⌋
/// Requires r < g; errors if no hypothesis set passes.
ChabautyReport chabauty_bound(const ChabautyInputs& inputs);

struct DeltaAuditRow {
    i64 n;
    i64 delta_value;
    bool zero_forced;  // p > n + e + 1, so δ must vanish
};

struct DeltaAudit {
    bool bounded_claims_checked; // e < p − 1
    bool pass;                   // always true when claims were skipped
    std::vector<DeltaAuditRow> rows;
};

/// Tabulates δ(n) for n = 0..n_max and, when e < p − 1, checks
/// δ(n) <= e·⌊n/(p−e−1)⌋ and δ(n) = 0 whenever p > n + e + 1.
DeltaAudit delta_property_audit(const LocalArithmetic& local, i64 n_max);

} // namespace chabgraph
