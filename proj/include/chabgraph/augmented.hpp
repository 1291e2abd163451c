#pragma once

#include <vector>

#include "chabgraph/divisor.hpp"
#include "chabgraph/graph_ops.hpp"
#include "chabgraph/multigraph.hpp"

namespace chabgraph {

/// A dual graph augmented with a non-negative genus per vertex. Models the
/// special fiber of a regular semistable curve: one vertex per component,
/// one edge per node, component geometry reduced to its genus.
class AugmentedCurve {
  public:
    AugmentedCurve(Multigraph graph, std::vector<i64> genus);

    const Multigraph& graph() const { return graph_; }
    i64 genus(int v) const { return genus_[static_cast<size_t>(v)]; }
    const std::vector<i64>& genera() const { return genus_; }

    /// graph_genus + Σ_v genus(v).
    i64 total_genus() const;

  private:
    Multigraph graph_;
    std::vector<i64> genus_;
};

enum class OracleMode { optimistic, pessimistic };

/// Degree-determined surrogate for h⁰ of a line bundle on a genus-g component.
/// Pessimistic = generic line bundle; optimistic = the Clifford/Riemann–Roch
/// upper envelope. The two coincide on genus-0 components.
struct SectionOracle {
    OracleMode mode;

    i64 h0(i64 component_genus, i64 degree) const;
    bool section_exists(i64 component_genus, i64 degree) const { return h0(component_genus, degree) > 0; }
};

inline SectionOracle optimistic_oracle() { return SectionOracle{OracleMode::optimistic}; }
inline SectionOracle pessimistic_oracle() { return SectionOracle{OracleMode::pessimistic}; }

/// Multidegree of the canonical bundle of the special fiber:
/// 2·genus(v) + valence(v) − 2 at each vertex; degree 2·total_genus − 2.
Divisor canonical_multidegree(const AugmentedCurve& ac);

/// The finite set S_D = {φ : Δφ + D ≥ 0}, canonically normalized and sorted.
/// Empty whenever deg D < 0.
std::vector<Twist> enumerate_effective_twists(const Multigraph& g, const Divisor& d);

/// Rank from the degree-nonnegativity step alone; equals the Baker–Norine
/// rank of D on the underlying graph.
i64 r_num(const AugmentedCurve& ac, const Divisor& d);

/// Rank from the sections step under the given oracle: the largest r such
/// that for every effective multidegree E of degree r some twist of D − E has
/// a section on every component. Points are taken in twist general position,
/// so only multidegrees matter.
i64 r_ab(const AugmentedCurve& ac, const Divisor& d, const SectionOracle& oracle);

/// True iff r_ab(ac, d, oracle) >= r (r >= 0). Cheaper than the full rank
/// when only a one-sided question is asked.
bool r_ab_at_least(const AugmentedCurve& ac, const Divisor& d, const SectionOracle& oracle, i64 r);

/// Brackets for the geometric section rank: lower = pessimistic oracle,
/// upper = optimistic oracle. The upper bracket always equals r_num.
struct RankBounds {
    i64 lower;
    i64 upper;
};

RankBounds rank_hierarchy(const AugmentedCurve& ac, const Divisor& d);

/// Per-twist, per-vertex section-space dimensions after imposing E(v) generic
/// conditions on each component: max(0, h0 − E(v)).
struct TwistH0Profile {
    struct Row {
        Twist twist;
        std::vector<i64> h0_after;
    };
    std::vector<Row> rows;
};

TwistH0Profile twist_general_position_profile(const AugmentedCurve& ac, const Divisor& d,
                                              const Divisor& e_multidegree,
                                              const SectionOracle& oracle);

} // namespace chabgraph
