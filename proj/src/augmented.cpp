#include "chabgraph/augmented.hpp"

#include <algorithm>

#include "chabgraph/errors.hpp"
#include "chabgraph/rank.hpp"
#include "chabgraph/reduction.hpp"

namespace chabgraph {

AugmentedCurve::AugmentedCurve(Multigraph graph, std::vector<i64> genus)
    : graph_(std::move(graph)), genus_(std::move(genus)) {
    if (static_cast<int>(genus_.size()) != graph_.size()) {
        throw InputError("genus list does not match the vertex set");
    }
    for (const i64 gv : genus_) {
        if (gv < 0) {
            throw InputError("component genus must be non-negative");
        }
    }
}

i64 AugmentedCurve::total_genus() const {
    i64 total = graph_genus(graph_);
    for (const i64 gv : genus_) {
        total = checked::add(total, gv);
    }
    return total;
}

i64 SectionOracle::h0(i64 component_genus, i64 degree) const {
    if (degree < 0) {
        return 0;
    }
    switch (mode) {
    case OracleMode::pessimistic:
        // Generic line bundle of this degree.
        return std::max<i64>(0, checked::sub(checked::add(degree, 1), component_genus));
    case OracleMode::optimistic:
        // Clifford for the special range, Riemann-Roch beyond it.
        if (degree <= checked::sub(checked::mul(2, component_genus), 2)) {
            return checked::add(degree / 2, 1);
        }
        return checked::sub(checked::add(degree, 1), component_genus);
    }
    throw InternalError("unreachable oracle mode");
}

Divisor canonical_multidegree(const AugmentedCurve& ac) {
    const Multigraph& g = ac.graph();
    Divisor out = canonical_divisor(g);
    for (int v = 0; v < g.size(); ++v) {
        out[v] = checked::add(out[v], checked::mul(2, ac.genus(v)));
    }
    return out;
}

std::vector<Twist> enumerate_effective_twists(const Multigraph& g, const Divisor& d) {
    std::vector<Twist> out;
    if (d.degree() < 0) {
        return out;
    }
    // Twists with Δφ + D >= 0 correspond one-to-one to the effective divisors
    // in the class of D (the kernel of Δ is the constants).
    for_each_effective_multidegree(g.size(), d.degree(), [&](const std::vector<i64>& f) {
        if (auto phi = equivalence_twist(g, d, Divisor(f))) {
            out.push_back(std::move(*phi));
        }
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

i64 r_num(const AugmentedCurve& ac, const Divisor& d) {
    return graph_divisor_rank(ac.graph(), d);
}

namespace {

// Is there an effective divisor in the class of `d` whose multidegree admits
// a section on every component?
bool class_has_sections(const AugmentedCurve& ac, const Divisor& d, const SectionOracle& oracle) {
    const Multigraph& g = ac.graph();
    if (d.degree() < 0) {
        return false;
    }
    const Divisor reduced = q_reduce(g, d, 0).divisor;
    if (reduced[0] < 0) {
        return false; // not equivalent to an effective divisor at all
    }
    const bool exhausted = for_each_effective_multidegree(
        g.size(), d.degree(), [&](const std::vector<i64>& f) {
            for (int v = 0; v < g.size(); ++v) {
                if (!oracle.section_exists(ac.genus(v), f[static_cast<size_t>(v)])) {
                    return true; // keep looking
                }
            }
            return q_reduce(g, Divisor(f), 0).divisor != reduced;
        });
    return !exhausted;
}

} // namespace

bool r_ab_at_least(const AugmentedCurve& ac, const Divisor& d, const SectionOracle& oracle, i64 r) {
    if (r < 0) {
        throw InputError("rank threshold must be non-negative");
    }
    return for_each_effective_multidegree(ac.graph().size(), r, [&](const std::vector<i64>& e) {
        Divisor remainder = d;
        for (int v = 0; v < ac.graph().size(); ++v) {
            remainder[v] = checked::sub(remainder[v], e[static_cast<size_t>(v)]);
        }
        return class_has_sections(ac, remainder, oracle);
    });
}

i64 r_ab(const AugmentedCurve& ac, const Divisor& d, const SectionOracle& oracle) {
    if (!r_ab_at_least(ac, d, oracle, 0)) {
        return -1;
    }
    for (i64 r = 1;; ++r) {
        if (!r_ab_at_least(ac, d, oracle, r)) {
            return r - 1;
        }
    }
}

RankBounds rank_hierarchy(const AugmentedCurve& ac, const Divisor& d) {
    const RankBounds bounds{r_ab(ac, d, pessimistic_oracle()), r_ab(ac, d, optimistic_oracle())};
    if (bounds.lower > bounds.upper) {
        throw InternalError("pessimistic rank exceeds optimistic rank");
    }
    if (bounds.upper != r_num(ac, d)) {
        throw InternalError("optimistic section rank disagrees with the numeric rank");
    }
    return bounds;
}

TwistH0Profile twist_general_position_profile(const AugmentedCurve& ac, const Divisor& d,
                                              const Divisor& e_multidegree,
                                              const SectionOracle& oracle) {
    if (!e_multidegree.is_effective()) {
        throw InputError("conditioning multidegree must be effective");
    }
    const Multigraph& g = ac.graph();
    TwistH0Profile profile;
    for (const Twist& phi : enumerate_effective_twists(g, d)) {
        const Divisor twisted = d + laplacian(g, phi);
        std::vector<i64> row(static_cast<size_t>(g.size()), 0);
        for (int v = 0; v < g.size(); ++v) {
            const i64 base = oracle.h0(ac.genus(v), twisted[v]);
            row[static_cast<size_t>(v)] = std::max<i64>(0, checked::sub(base, e_multidegree[v]));
        }
        profile.rows.push_back(TwistH0Profile::Row{phi, std::move(row)});
    }
    return profile;
}

} // namespace chabgraph
