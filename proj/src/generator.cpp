#include "chabgraph/generator.hpp"

#include <string>

#include "chabgraph/errors.hpp"

namespace chabgraph {

namespace {

i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

} // namespace

FamilyInstance random_instance(std::mt19937_64& rng, const FamilyParams& params) {
    const int n = static_cast<int>(uniform(rng, 1, params.max_vertices));

    std::vector<std::string> ids;
    ids.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        ids.push_back("v" + std::to_string(v));
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(uniform(rng, 0, v - 1));
        edges.emplace_back(ids[static_cast<size_t>(parent)], ids[static_cast<size_t>(v)]);
    }
    const i64 extra = uniform(rng, 0, params.max_extra_edges);
    for (i64 i = 0; i < extra; ++i) {
        const int u = static_cast<int>(uniform(rng, 0, n - 1));
        int w = static_cast<int>(uniform(rng, 0, n - 1)); // u == w makes a loop
        if (!params.allow_loops) {
            if (n == 1) {
                continue;
            }
            while (w == u) {
                w = static_cast<int>(uniform(rng, 0, n - 1));
            }
        }
        edges.emplace_back(ids[static_cast<size_t>(u)], ids[static_cast<size_t>(w)]);
    }

    std::vector<i64> genera(static_cast<size_t>(n), 0);
    if (!params.totally_degenerate) {
        for (auto& gv : genera) {
            gv = uniform(rng, 0, params.max_genus);
        }
    }

    std::vector<i64> coeffs(static_cast<size_t>(n), 0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        i64 degree = 0;
        for (auto& c : coeffs) {
            c = uniform(rng, -params.coeff_bound, params.coeff_bound);
            degree += c;
        }
        if (params.max_abs_degree < 0 || std::abs(degree) <= params.max_abs_degree) {
            break;
        }
        if (attempt == 999) {
            coeffs.assign(static_cast<size_t>(n), 0);
        }
    }

    return FamilyInstance{AugmentedCurve(Multigraph(std::move(ids), edges), std::move(genera)),
                          Divisor(std::move(coeffs))};
}

} // namespace chabgraph
