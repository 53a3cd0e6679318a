#pragma once

#include <array>
#include <optional>

#include "pawkit/graph.hpp"

namespace pawkit {

/// An induced paw: a triangle plus a pendant vertex attached to exactly one
/// triangle vertex. triangle[2] is the attachment vertex; triangle[0] and
/// triangle[1] are the other two in ascending order.
struct Paw {
    std::array<VertexId, 3> triangle;
    VertexId pendant = -1;

    VertexSet vertices() const;
    std::array<VertexPair, 4> paw_edges() const;
    /// The two non-adjacent pairs (pendant with each non-attachment vertex).
    std::array<VertexPair, 2> missing_pairs() const;
    std::array<VertexPair, 6> all_pairs() const;

    bool operator==(const Paw&) const = default;
};

enum class ComponentKind { TriangleFree, CompleteMultipartite };

struct ComponentClass {
    ComponentKind kind = ComponentKind::TriangleFree;
    /// Present iff kind == CompleteMultipartite: the unique partition,
    /// ordered by size ascending, ties by smallest id. Always >= 3 parts.
    std::vector<VertexSet> parts;
};

/// Smallest induced paw of g, or nullopt. Deterministic: lexicographically
/// smallest triangle (as a sorted triple), then smallest pendant.
std::optional<Paw> find_paw(const Graph& g);

/// Smallest paw of `host` all four of whose edges are still present in
/// `working` (a subgraph of host on the same vertices). The greedy packing
/// uses this to skip paws that reuse an already-packed edge.
std::optional<Paw> find_paw_using_edges(const Graph& host, const Graph& working);

bool is_paw_free(const Graph& g);

/// Classifies a connected component: TriangleFree when it has no triangle,
/// CompleteMultipartite when it splits into >= 3 parts, nullopt otherwise
/// (the component then contains a paw).
std::optional<ComponentClass> classify_component(const Graph& g, const VertexSet& comp);

/// The unique partition of a complete multipartite component with >= 3
/// parts, or nullopt. Vertices share a part iff they have equal
/// neighborhoods within the component.
std::optional<std::vector<VertexSet>> multipartite_parts(const Graph& g,
                                                         const VertexSet& comp);

/// Union of the components of g - s that classify TriangleFree. Throws
/// std::logic_error if a component of g - s is neither triangle-free nor
/// complete multipartite (s does not hit every paw: caller bug).
VertexSet triangle_free_vertices(const Graph& g, const VertexSet& s);

/// All triangles as sorted triples in lexicographic order.
std::vector<std::array<VertexId, 3>> list_triangles(const Graph& g);

}  // namespace pawkit
