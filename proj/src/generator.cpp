#include "pawkit/generator.hpp"

#include <algorithm>
#include <set>

namespace pawkit {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below(0)");
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t value;
    do {
        value = next();
    } while (value >= limit);
    return value % bound;
}

namespace {

constexpr int kMaxVertices = 100000;

Instance make_uniform(const UniformFamily& family, int k, SplitMix64& rng) {
    if (family.n < 0 || family.n > kMaxVertices)
        throw GenerationError("uniform: vertex count out of range");
    if (family.p < 0.0 || family.p > 1.0)
        throw GenerationError("uniform: probability out of range");
    std::vector<VertexPair> edges;
    for (int u = 0; u < family.n; ++u)
        for (int v = u + 1; v < family.n; ++v)
            if (rng.bernoulli(family.p)) edges.emplace_back(u, v);
    return Instance{Graph::from_edge_list(family.n, edges), k};
}

// Appends one paw-free component on the vertex range [first, first+size).
void append_component(std::vector<VertexPair>& edges, int first, int size,
                      PlantedBase base, SplitMix64& rng) {
    if (base == PlantedBase::TriangleFree || size < 3) {
        // Random bipartite: assign sides, cross edges with probability 1/2.
        std::vector<bool> side(size);
        for (int i = 0; i < size; ++i) side[i] = rng.next() & 1;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (side[i] != side[j] && rng.bernoulli(0.5))
                    edges.emplace_back(first + i, first + j);
        return;
    }
    // Complete multipartite with 3..min(size, 6) parts.
    int part_count = 3 + static_cast<int>(rng.next_below(
                             static_cast<std::uint64_t>(std::min(size, 6) - 3 + 1)));
    std::vector<int> part(size);
    for (int i = 0; i < part_count; ++i) part[i] = i;
    for (int i = part_count; i < size; ++i)
        part[i] = static_cast<int>(rng.next_below(part_count));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (part[i] != part[j]) edges.emplace_back(first + i, first + j);
}

Instance make_planted(const PlantedFamily& family, int k, SplitMix64& rng) {
    if (family.n < 0 || family.n > kMaxVertices)
        throw GenerationError("planted: vertex count out of range");
    if (family.edits < 0) throw GenerationError("planted: negative edit count");
    long long pair_count = static_cast<long long>(family.n) * (family.n - 1) / 2;
    if (family.edits > pair_count)
        throw GenerationError("planted: more edits than vertex pairs");

    std::vector<VertexPair> edges;
    int first = 0;
    while (first < family.n) {
        int remaining = family.n - first;
        int size = family.base == PlantedBase::Multipartite
                       ? 3 + static_cast<int>(rng.next_below(6))
                       : 2 + static_cast<int>(rng.next_below(7));
        size = std::min(size, remaining);
        append_component(edges, first, size, family.base, rng);
        first += size;
    }
    Graph g = Graph::from_edge_list(family.n, edges);

    std::set<VertexPair> toggled;
    while (static_cast<int>(toggled.size()) < family.edits) {
        auto u = static_cast<VertexId>(rng.next_below(family.n));
        auto v = static_cast<VertexId>(rng.next_below(family.n));
        if (u == v) continue;
        toggled.insert(ordered_pair(u, v));
    }
    if (!toggled.empty())
        g = apply_edits(g, EditSet{{toggled.begin(), toggled.end()}});
    return Instance{g, k};
}

// Gadgets below fire their rule on first scan (with s taken from the
// greedy packing for rules 2-4).
std::vector<VertexPair> trigger_gadget(int rule_id, int k, int& n) {
    std::vector<VertexPair> edges;
    switch (rule_id) {
        case 1: {
            // Star with k+3 leaves: the leaves are twins.
            int leaves = k + 3;
            n = leaves + 1;
            for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
            return edges;
        }
        case 2: {
            // Complete graph on k+5 vertices: k+5 singleton parts, all with
            // an empty neighborhood outside the component.
            n = k + 5;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return edges;
        }
        case 3: {
            // A paw puts {0,1,2,3} into S; vertices 4.. are 4k+7 common
            // neighbors of the adjacent pair (0,1), isolated in G-S.
            int commons = 4 * k + 7;
            n = 4 + commons;
            edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
            for (int i = 4; i < n; ++i) {
                edges.emplace_back(0, i);
                edges.emplace_back(1, i);
            }
            return edges;
        }
        case 4: {
            // A paw component (S) next to a separate complete tripartite
            // component with one part of size 3k+4.
            int big = 3 * k + 4;
            n = 4 + big + 2;
            edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
            int a = 4 + big, b = 4 + big + 1;
            edges.emplace_back(a, b);
            for (int i = 0; i < big; ++i) {
                edges.emplace_back(4 + i, a);
                edges.emplace_back(4 + i, b);
            }
            return edges;
        }
        default:
            throw GenerationError("rule_trigger: rule id must be 1..4");
    }
}

Instance make_rule_trigger(const RuleTriggerFamily& family, int k, SplitMix64& rng) {
    if (k < 0) throw GenerationError("rule_trigger: negative budget");
    int n = 0;
    std::vector<VertexPair> edges = trigger_gadget(family.rule_id, k, n);

    // Pad with a random triangle-free component (paw-free, so the packing
    // and the trigger are unaffected), then shuffle labels.
    int pad = static_cast<int>(rng.next_below(5));
    if (pad > 0) append_component(edges, n, pad, PlantedBase::TriangleFree, rng);
    n += pad;

    std::vector<VertexId> relabel(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(relabel[i], relabel[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
        if (u > v) std::swap(u, v);
    }
    return Instance{Graph::from_edge_list(n, edges), k};
}

}  // namespace

Instance generate(const GenSpec& spec) {
    if (spec.k < 0) throw GenerationError("negative budget");
    SplitMix64 rng(spec.seed);
    if (const auto* uniform = std::get_if<UniformFamily>(&spec.family))
        return make_uniform(*uniform, spec.k, rng);
    if (const auto* planted = std::get_if<PlantedFamily>(&spec.family))
        return make_planted(*planted, spec.k, rng);
    return make_rule_trigger(std::get<RuleTriggerFamily>(spec.family), spec.k, rng);
}

}  // namespace pawkit
