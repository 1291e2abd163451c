#include "chabgraph/reduction.hpp"

#include <algorithm>
#include <deque>

#include "chabgraph/errors.hpp"

namespace chabgraph {

namespace {

// BFS distances from q over non-loop edges. The graph is connected, so every
// vertex gets a finite distance.
std::vector<int> distances_from(const Multigraph& g, int q) {
    std::vector<int> dist(static_cast<size_t>(g.size()), -1);
    std::deque<int> queue{q};
    dist[static_cast<size_t>(q)] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < g.size(); ++w) {
            if (w == v || dist[static_cast<size_t>(w)] >= 0 || g.multiplicity(v, w) == 0) {
                continue;
            }
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

// Adds k times the Laplacian of the indicator function of S to c, and
// records the firing in `fired`.
void fire_set(const Multigraph& g, const std::vector<char>& in_set, i64 k, std::vector<i64>& c,
              std::vector<i64>& fired) {
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
        i64 crossing = 0; // edges between v and the other side of the cut
        for (int w = 0; w < n; ++w) {
            if (w == v || in_set[static_cast<size_t>(w)] == in_set[static_cast<size_t>(v)]) {
                continue;
            }
            crossing = checked::add(crossing, g.multiplicity(v, w));
        }
        const i64 moved = checked::mul(k, crossing);
        auto& cv = c[static_cast<size_t>(v)];
        if (in_set[static_cast<size_t>(v)]) {
            cv = checked::sub(cv, moved);
            fired[static_cast<size_t>(v)] = checked::add(fired[static_cast<size_t>(v)], k);
        } else {
            cv = checked::add(cv, moved);
        }
    }
}

// Dhar's burning algorithm: starts a fire at q and burns v once the edges
// from v into the burnt region outnumber its chips. Returns the burnt flags.
std::vector<char> burn(const Multigraph& g, const std::vector<i64>& c, int q) {
    const int n = g.size();
    std::vector<char> burnt(static_cast<size_t>(n), 0);
    std::vector<i64> burning_edges(static_cast<size_t>(n), 0);
    std::deque<int> queue{q};
    burnt[static_cast<size_t>(q)] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < n; ++w) {
            if (w == v || burnt[static_cast<size_t>(w)] || g.multiplicity(v, w) == 0) {
                continue;
            }
            auto& be = burning_edges[static_cast<size_t>(w)];
            be = checked::add(be, g.multiplicity(v, w));
            if (c[static_cast<size_t>(w)] < be) {
                burnt[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return burnt;
}

} // namespace

namespace detail {

ReduceWithTwist q_reduce_with_twist(const Multigraph& g, const Divisor& d, int q) {
    const int n = g.size();
    if (q < 0 || q >= n) {
        throw InputError("base vertex index out of range");
    }
    if (d.size() != n) {
        throw InternalError("divisor size does not match graph");
    }

    std::vector<i64> c = d.coeffs();
    std::vector<i64> fired(static_cast<size_t>(n), 0);

    // Bring every vertex except q out of debt, working inward from the
    // largest BFS distance. Firing {dist < k} feeds the distance-k shell and
    // touches nothing farther out, so each shell stays fixed once handled.
    const std::vector<int> dist = distances_from(g, q);
    const int max_dist = *std::max_element(dist.begin(), dist.end());
    for (int level = max_dist; level >= 1; --level) {
        std::vector<char> inner(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            inner[static_cast<size_t>(v)] = dist[static_cast<size_t>(v)] < level ? 1 : 0;
        }
        i64 k = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<size_t>(v)] != level || c[static_cast<size_t>(v)] >= 0) {
                continue;
            }
            i64 feed = 0; // edges from the inner region into v; >= 1 at this level
            for (int w = 0; w < n; ++w) {
                if (w != v && inner[static_cast<size_t>(w)]) {
                    feed = checked::add(feed, g.multiplicity(v, w));
                }
            }
            const i64 debt = checked::neg(c[static_cast<size_t>(v)]);
            k = std::max(k, (debt + feed - 1) / feed);
        }
        if (k > 0) {
            fire_set(g, inner, k, c, fired);
        }
    }

    // Repeated burning: fire the unburnt set until the whole graph burns.
    constexpr i64 kMaxRounds = 10'000'000;
    for (i64 round = 0;; ++round) {
        if (round > kMaxRounds) {
            throw InternalError("q-reduction failed to converge");
        }
        const std::vector<char> burnt = burn(g, c, q);
        std::vector<char> unburnt(static_cast<size_t>(n), 0);
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (!burnt[static_cast<size_t>(v)]) {
                unburnt[static_cast<size_t>(v)] = 1;
                any = true;
            }
        }
        if (!any) {
            break;
        }
        fire_set(g, unburnt, 1, c, fired);
    }

    return ReduceWithTwist{Divisor(std::move(c)), std::move(fired)};
}

} // namespace detail

ReducedDivisor q_reduce(const Multigraph& g, const Divisor& d, int q) {
    auto result = detail::q_reduce_with_twist(g, d, q);
    return ReducedDivisor{std::move(result.divisor), q};
}

bool is_linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree()) {
        return false;
    }
    return q_reduce(g, d1, 0).divisor == q_reduce(g, d2, 0).divisor;
}

std::optional<Twist> equivalence_twist(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree()) {
        return std::nullopt;
    }
    auto r1 = detail::q_reduce_with_twist(g, d1, 0);
    auto r2 = detail::q_reduce_with_twist(g, d2, 0);
    if (r1.divisor != r2.divisor) {
        return std::nullopt;
    }
    // d1 + Δf1 = d2 + Δf2, so f1 − f2 carries d1 to d2.
    std::vector<i64> raw(static_cast<size_t>(g.size()), 0);
    for (int v = 0; v < g.size(); ++v) {
        raw[static_cast<size_t>(v)] = checked::sub(r1.fired[static_cast<size_t>(v)], r2.fired[static_cast<size_t>(v)]);
    }
    return Twist(std::move(raw));
}

} // namespace chabgraph
