#include "pawkit/recognition.hpp"

#include <algorithm>

namespace pawkit {

VertexSet Paw::vertices() const {
    return sorted_unique({triangle[0], triangle[1], triangle[2], pendant});
}

std::array<VertexPair, 4> Paw::paw_edges() const {
    return {ordered_pair(triangle[0], triangle[1]),
            ordered_pair(triangle[0], triangle[2]),
            ordered_pair(triangle[1], triangle[2]),
            ordered_pair(triangle[2], pendant)};
}

std::array<VertexPair, 2> Paw::missing_pairs() const {
    return {ordered_pair(triangle[0], pendant), ordered_pair(triangle[1], pendant)};
}

std::array<VertexPair, 6> Paw::all_pairs() const {
    auto e = paw_edges();
    auto m = missing_pairs();
    return {e[0], e[1], e[2], e[3], m[0], m[1]};
}

std::optional<Paw> find_paw_using_edges(const Graph& host, const Graph& working) {
    // Triangles of `working` in lexicographic (a, b, c) order; pendants need
    // their edge in `working` and non-adjacency to the other two in `host`.
    for (VertexId a : working.vertices()) {
        for (VertexId b : working.neighbors(a)) {
            if (b <= a) continue;
            VertexSet common = common_neighbors(working, a, b);
            for (VertexId c : common) {
                if (c <= b) continue;
                VertexId best_pendant = -1;
                VertexId best_attach = -1;
                const std::array<VertexId, 3> tri{a, b, c};
                for (VertexId t : tri) {
                    VertexId o1 = (t == a) ? b : a;
                    VertexId o2 = (t == c) ? b : c;
                    for (VertexId w : working.neighbors(t)) {
                        if (w == a || w == b || w == c) continue;
                        if (host.has_edge(w, o1) || host.has_edge(w, o2)) continue;
                        if (best_pendant == -1 || w < best_pendant) {
                            best_pendant = w;
                            best_attach = t;
                        }
                    }
                }
                if (best_pendant != -1) {
                    VertexId o1 = (best_attach == a) ? b : a;
                    VertexId o2 = (best_attach == c) ? b : c;
                    return Paw{{std::min(o1, o2), std::max(o1, o2), best_attach},
                               best_pendant};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Paw> find_paw(const Graph& g) { return find_paw_using_edges(g, g); }

bool is_paw_free(const Graph& g) { return !find_paw(g).has_value(); }

namespace {

bool has_triangle_within(const Graph& g, const VertexSet& comp) {
    for (VertexId u : comp)
        for (VertexId v : g.neighbors(u)) {
            if (v <= u || !set_contains(comp, v)) continue;
            for (VertexId w : common_neighbors(g, u, v))
                if (set_contains(comp, w)) return true;
        }
    return false;
}

}  // namespace

std::optional<std::vector<VertexSet>> multipartite_parts(const Graph& g,
                                                         const VertexSet& comp) {
    if (comp.empty()) return std::nullopt;
    // Group by neighborhood within the component; equal open neighborhoods
    // force non-adjacency in a simple graph, so groups are independent sets.
    std::map<VertexSet, VertexSet> groups;
    for (VertexId v : comp)
        groups[set_intersection(g.neighbors(v), comp)].push_back(v);
    if (groups.size() < 3) return std::nullopt;
    // Complete multipartite iff each vertex is adjacent to everything
    // outside its own group.
    for (const auto& [nbhd, members] : groups)
        if (nbhd.size() != comp.size() - members.size()) return std::nullopt;

    std::vector<VertexSet> parts;
    parts.reserve(groups.size());
    for (auto& [nbhd, members] : groups) parts.push_back(members);
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return parts;
}

std::optional<ComponentClass> classify_component(const Graph& g, const VertexSet& comp) {
    if (!has_triangle_within(g, comp))
        return ComponentClass{ComponentKind::TriangleFree, {}};
    if (auto parts = multipartite_parts(g, comp))
        return ComponentClass{ComponentKind::CompleteMultipartite, std::move(*parts)};
    return std::nullopt;
}

VertexSet triangle_free_vertices(const Graph& g, const VertexSet& s) {
    Graph rest = g.remove_vertices(s);
    VertexSet out;
    for (const VertexSet& comp : connected_components(rest)) {
        auto cls = classify_component(rest, comp);
        if (!cls)
            throw std::logic_error(
                "component of G-S is neither triangle-free nor complete "
                "multipartite; S does not hit every paw");
        if (cls->kind == ComponentKind::TriangleFree) out = set_union(out, comp);
    }
    return out;
}

std::vector<std::array<VertexId, 3>> list_triangles(const Graph& g) {
    std::vector<std::array<VertexId, 3>> out;
    for (VertexId a : g.vertices())
        for (VertexId b : g.neighbors(a)) {
            if (b <= a) continue;
            for (VertexId c : common_neighbors(g, a, b))
                if (c > b) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace pawkit
