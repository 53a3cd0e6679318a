#include "pawkit/packing.hpp"

namespace pawkit {

PawPacking greedy_paw_packing(const Graph& g, std::optional<std::size_t> stop_after) {
    PawPacking packing;
    Graph working = g;
    while (!stop_after || packing.paws.size() < *stop_after) {
        auto paw = find_paw_using_edges(g, working);
        if (!paw) break;
        auto edges = paw->paw_edges();
        working = working.remove_edges({edges.begin(), edges.end()});
        packing.s = set_union(packing.s, paw->vertices());
        packing.paws.push_back(*paw);
    }
    return packing;
}

bool packing_exceeds(const PawPacking& p, int k) {
    if (k < 0) return true;
    return p.paws.size() > static_cast<std::size_t>(k);
}

}  // namespace pawkit
