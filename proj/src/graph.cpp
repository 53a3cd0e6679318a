#include "pawkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pawkit {

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

VertexSet sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

EditSet::EditSet(std::vector<VertexPair> pairs) {
    for (auto& p : pairs) {
        if (p.first == p.second)
            throw std::invalid_argument("edit set contains a self pair");
        p = ordered_pair(p.first, p.second);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    pairs_ = std::move(pairs);
}

EditSet EditSet::single(VertexId a, VertexId b) {
    return EditSet{{ordered_pair(a, b)}};
}

bool EditSet::contains(VertexId a, VertexId b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), ordered_pair(a, b));
}

Graph Graph::from_edge_list(int n, const std::vector<VertexPair>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<VertexId> vertices(n);
    for (int i = 0; i < n; ++i) vertices[i] = i;
    return from_parts(std::move(vertices), edges);
}

Graph Graph::from_parts(std::vector<VertexId> vertices,
                        const std::vector<VertexPair>& edges) {
    Graph g;
    g.vertices_ = sorted_unique(std::move(vertices));
    g.adjacency_.reserve(g.vertices_.size());
    for (VertexId v : g.vertices_) g.adjacency_[v];
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!g.adjacency_.contains(u) || !g.adjacency_.contains(v))
            throw std::invalid_argument("edge endpoint not a vertex");
        if (!g.edge_keys_.insert(edge_key(u, v)).second)
            throw std::invalid_argument("duplicate edge");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& [v, nbrs] : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (VertexId u : vertices_)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_vertices(const VertexSet& vs) const {
    VertexSet kept = set_difference(vertices_, vs);
    return induced_subgraph(*this, kept);
}

Graph Graph::remove_edges(const std::vector<VertexPair>& es) const {
    EditSet removal{es};
    for (auto [u, v] : removal.pairs())
        if (!has_edge(u, v))
            throw std::invalid_argument("cannot remove absent edge");
    return apply_edits(*this, removal);
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
    for (auto [u, v] : edits.pairs())
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw std::invalid_argument("edit mentions unknown vertex");
    std::vector<VertexPair> result;
    result.reserve(g.edge_count() + edits.size());
    for (auto e : g.edges())
        if (!edits.contains(e.first, e.second)) result.push_back(e);
    for (auto p : edits.pairs())
        if (!g.has_edge(p.first, p.second)) result.push_back(p);
    return Graph::from_parts(g.vertices(), result);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    std::unordered_set<VertexId> seen;
    for (VertexId start : g.vertices()) {
        if (seen.contains(start)) continue;
        VertexSet comp;
        std::deque<VertexId> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::map<int, VertexSet> distance_layers(const Graph& g, const VertexSet& sources,
                                         int max_d) {
    for (VertexId v : sources)
        if (!g.has_vertex(v))
            throw std::invalid_argument("distance source not a vertex");
    std::unordered_map<VertexId, int> dist;
    std::deque<VertexId> queue;
    for (VertexId v : sources) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        int d = dist[v];
        if (d == max_d) continue;
        for (VertexId w : g.neighbors(v)) {
            if (dist.contains(w)) continue;
            dist[w] = d + 1;
            queue.push_back(w);
        }
    }
    std::map<int, VertexSet> layers;
    for (VertexId v : g.vertices()) {
        auto it = dist.find(v);
        if (it != dist.end()) layers[it->second].push_back(v);
    }
    return layers;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    for (VertexId v : keep)
        if (!g.has_vertex(v))
            throw std::invalid_argument("kept vertex not in graph");
    std::vector<VertexPair> edges;
    for (VertexId u : keep)
        for (VertexId v : g.neighbors(u))
            if (u < v && set_contains(keep, v)) edges.emplace_back(u, v);
    return Graph::from_parts(keep, edges);
}

VertexSet common_neighbors(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("common_neighbors of a vertex with itself");
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    return set_intersection(nu, nv);
}

}  // namespace pawkit
