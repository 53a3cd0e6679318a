#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pawkit {

using VertexId = int;
using VertexPair = std::pair<VertexId, VertexId>;

// Unordered pairs are stored normalized with first < second.
inline VertexPair ordered_pair(VertexId a, VertexId b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// A VertexSet is kept sorted ascending with no duplicates.
using VertexSet = std::vector<VertexId>;

bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet sorted_unique(std::vector<VertexId> v);

/// Set of unordered vertex pairs; applying it to a graph toggles each pair.
class EditSet {
public:
    EditSet() = default;
    explicit EditSet(std::vector<VertexPair> pairs);
    static EditSet single(VertexId a, VertexId b);

    const std::vector<VertexPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(VertexId a, VertexId b) const;

    bool operator==(const EditSet&) const = default;

private:
    std::vector<VertexPair> pairs_;  // normalized, sorted, unique
};

/// Immutable simple undirected graph with stable vertex identities.
/// Identifiers survive vertex deletion: derived graphs keep the ids of the
/// vertices they retain, so traces stay interpretable across reductions.
class Graph {
public:
    Graph() = default;

    /// Vertices 0..n-1. Throws std::invalid_argument on self-loops,
    /// out-of-range endpoints or duplicate edges.
    static Graph from_edge_list(int n, const std::vector<VertexPair>& edges);
    /// Arbitrary vertex ids (deduplicated and sorted internally).
    static Graph from_parts(std::vector<VertexId> vertices,
                            const std::vector<VertexPair>& edges);

    const VertexSet& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const { return adjacency_.contains(v); }
    bool has_edge(VertexId u, VertexId v) const {
        return edge_keys_.contains(edge_key(u, v));
    }
    /// Neighbors in ascending id order. Throws on unknown vertex.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    /// All edges as normalized pairs in lexicographic order.
    std::vector<VertexPair> edges() const;

    Graph remove_vertices(const VertexSet& vs) const;
    Graph remove_edges(const std::vector<VertexPair>& es) const;

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && adjacency_ == other.adjacency_;
    }

private:
    static std::uint64_t edge_key(VertexId u, VertexId v) {
        VertexPair p = ordered_pair(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.first)) << 32) |
               static_cast<std::uint32_t>(p.second);
    }

    VertexSet vertices_;
    std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::size_t edge_count_ = 0;
};

/// A problem instance: a graph plus the remaining edit budget.
struct Instance {
    Graph graph;
    int budget = 0;
};

/// Symmetric difference of E(g) and the edit pairs. Throws
/// std::invalid_argument if an edit mentions an unknown vertex.
Graph apply_edits(const Graph& g, const EditSet& edits);

/// Partition of V(g) into connected components, ordered by smallest
/// contained id; each component sorted ascending.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertices grouped by BFS distance from `sources`, up to max_d.
/// Only non-empty layers appear in the result.
std::map<int, VertexSet> distance_layers(const Graph& g, const VertexSet& sources,
                                         int max_d);

/// Subgraph induced on `keep` (which must be a subset of V(g)).
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// adj(u) ∩ adj(v); u and v must be distinct existing vertices.
VertexSet common_neighbors(const Graph& g, VertexId u, VertexId v);

}  // namespace pawkit
