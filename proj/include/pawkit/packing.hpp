#pragma once

#include <optional>

#include "pawkit/recognition.hpp"

namespace pawkit {

/// Greedy maximal packing of edge-disjoint induced paws plus the set S of
/// all vertices it uses.
struct PawPacking {
    std::vector<Paw> paws;
    VertexSet s;
};

/// Repeatedly takes the lexicographically smallest induced paw whose four
/// edges are all still unused, then retires those edges. The result is
/// maximal: every induced paw of g shares an edge with a packed paw, so
/// every component of g - s is triangle-free or complete multipartite.
/// `stop_after` caps the number of paws collected (pipelines request k+1,
/// since anything beyond k is already a no-instance).
PawPacking greedy_paw_packing(const Graph& g,
                              std::optional<std::size_t> stop_after = std::nullopt);

bool packing_exceeds(const PawPacking& p, int k);

}  // namespace pawkit
