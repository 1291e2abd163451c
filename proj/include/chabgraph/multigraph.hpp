#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chabgraph/checked.hpp"

namespace chabgraph {

/// A connected finite multigraph. Parallel edges and loops are allowed;
/// vertices are identified by unique string ids and indexed by declaration
/// order. Connectivity, id uniqueness and edge endpoints are validated at
/// construction; instances are immutable afterwards.
class Multigraph {
  public:
    Multigraph(std::vector<std::string> vertex_ids,
               const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(ids_.size()); }
    i64 edge_count() const { return edge_count_; }

    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::string& vertex_id(int v) const { return ids_.at(static_cast<size_t>(v)); }

    /// Index of the vertex with the given id; throws InputError if unknown.
    int vertex_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    /// Number of edges between u and v (u != v), or the loop count at u (u == v).
    i64 multiplicity(int u, int v) const { return mult_[static_cast<size_t>(u)][static_cast<size_t>(v)]; }
    i64 loop_count(int v) const { return mult_[static_cast<size_t>(v)][static_cast<size_t>(v)]; }

    /// Valence of v with each loop counting twice.
    i64 valence(int v) const { return valence_[static_cast<size_t>(v)]; }
    /// Valence ignoring loops; this is what the Laplacian and chip-firing see.
    i64 nonloop_valence(int v) const { return nonloop_valence_[static_cast<size_t>(v)]; }

    /// Edge list as (u, v) index pairs with u <= v; loops appear as (v, v).
    const std::vector<std::pair<int, int>>& edges() const { return edge_list_; }

    bool operator==(const Multigraph& other) const {
        return ids_ == other.ids_ && mult_ == other.mult_;
    }

  private:
    void check_connected() const;

    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<i64>> mult_; // symmetric; diagonal = loop count
    std::vector<std::pair<int, int>> edge_list_;
    std::vector<i64> valence_;
    std::vector<i64> nonloop_valence_;
    i64 edge_count_ = 0;
};

} // namespace chabgraph
