#include "chabgraph/multigraph.hpp"

#include <algorithm>
#include <deque>

#include "chabgraph/errors.hpp"

namespace chabgraph {

Multigraph::Multigraph(std::vector<std::string> vertex_ids,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : ids_(std::move(vertex_ids)) {
    if (ids_.empty()) {
        throw InputError("graph must have at least one vertex");
    }
    for (int v = 0; v < size(); ++v) {
        const auto& id = ids_[static_cast<size_t>(v)];
        if (id.empty()) {
            throw InputError("vertex ids must be non-empty");
        }
        if (!index_.emplace(id, v).second) {
            throw InputError("duplicate vertex id '" + id + "'");
        }
    }

    const auto n = static_cast<size_t>(size());
    mult_.assign(n, std::vector<i64>(n, 0));
    for (const auto& [a, b] : edges) {
        const int u = vertex_index(a);
        const int v = vertex_index(b);
        const int lo = std::min(u, v);
        const int hi = std::max(u, v);
        mult_[static_cast<size_t>(lo)][static_cast<size_t>(hi)] += 1;
        if (lo != hi) {
            mult_[static_cast<size_t>(hi)][static_cast<size_t>(lo)] += 1;
        }
        edge_list_.emplace_back(lo, hi);
        ++edge_count_;
    }
    std::sort(edge_list_.begin(), edge_list_.end());

    valence_.assign(n, 0);
    nonloop_valence_.assign(n, 0);
    for (size_t v = 0; v < n; ++v) {
        for (size_t w = 0; w < n; ++w) {
            if (w == v) {
                continue;
            }
            nonloop_valence_[v] += mult_[v][w];
        }
        valence_[v] = nonloop_valence_[v] + 2 * mult_[v][v];
    }

    check_connected();
}

int Multigraph::vertex_index(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) {
        throw InputError("unknown vertex '" + id + "'");
    }
    return it->second;
}

void Multigraph::check_connected() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < n; ++w) {
            if (w == v || seen[static_cast<size_t>(w)] || multiplicity(v, w) == 0) {
                continue;
            }
            seen[static_cast<size_t>(w)] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    if (reached != n) {
        throw InputError("graph is not connected");
    }
}

} // namespace chabgraph
