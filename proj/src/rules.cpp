#include "pawkit/rules.hpp"

#include <algorithm>
#include <sstream>

#include "pawkit/recognition.hpp"

namespace pawkit {

namespace {

void append_ids(std::ostringstream& out, const VertexSet& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ',';
        out << ids[i];
    }
}

bool same_open_neighborhood(const Graph& g, const VertexSet& x) {
    if (x.size() < 2) return true;
    const auto& first = g.neighbors(x.front());
    for (std::size_t i = 1; i < x.size(); ++i)
        if (g.neighbors(x[i]) != first) return false;
    return true;
}

// Neighborhood of v outside `comp`.
VertexSet outside_neighborhood(const Graph& g, VertexId v, const VertexSet& comp) {
    return set_difference(g.neighbors(v), comp);
}

}  // namespace

std::string RuleApplication::to_line() const {
    std::ostringstream out;
    out << "rule=" << rule_id << " witness=";
    append_ids(out, witness);
    out << " removed_v=";
    append_ids(out, removed_vertices);
    out << " removed_e=";
    for (std::size_t i = 0; i < removed_edges.size(); ++i) {
        if (i) out << ',';
        out << removed_edges[i].first << '-' << removed_edges[i].second;
    }
    out << " dk=" << budget_delta;
    return out.str();
}

std::optional<VertexSet> find_rule1(const Graph& g, int k) {
    const std::size_t needed = static_cast<std::size_t>(k) + 3;
    std::map<std::vector<VertexId>, VertexSet> groups;
    for (VertexId v : g.vertices()) groups[g.neighbors(v)].push_back(v);

    const VertexSet* best = nullptr;
    for (const auto& [nbhd, members] : groups) {
        if (members.size() < needed) continue;
        if (!best || members.front() < best->front()) best = &members;
    }
    if (!best) return std::nullopt;
    return VertexSet(best->begin(), best->begin() + static_cast<long>(needed));
}

std::pair<Instance, RuleApplication> apply_rule1(const Instance& inst,
                                                 const VertexSet& x) {
    if (static_cast<int>(x.size()) < inst.budget + 3)
        throw std::invalid_argument("rule 1 witness smaller than k+3");
    for (VertexId v : x)
        if (!inst.graph.has_vertex(v))
            throw std::invalid_argument("rule 1 witness mentions unknown vertex");
    if (!same_open_neighborhood(inst.graph, x))
        throw std::invalid_argument("rule 1 witness vertices are not twins");

    VertexSet removed{x.front()};
    RuleApplication app{1, x, removed, {}, 0};
    return {Instance{inst.graph.remove_vertices(removed), inst.budget}, app};
}

std::optional<std::vector<VertexSet>> find_rule2(const Graph& g, int k,
                                                 const VertexSet& s) {
    const std::size_t needed = static_cast<std::size_t>(k) + 5;
    Graph rest = g.remove_vertices(s);
    for (const VertexSet& comp : connected_components(rest)) {
        auto parts = multipartite_parts(rest, comp);
        if (!parts) continue;
        // Keep parts whose members agree on their neighborhood outside the
        // component, then bucket those parts by that neighborhood.
        std::map<VertexSet, std::vector<VertexSet>> buckets;
        for (const VertexSet& part : *parts) {
            VertexSet outside = outside_neighborhood(g, part.front(), comp);
            bool uniform = true;
            for (std::size_t i = 1; i < part.size() && uniform; ++i)
                uniform = outside_neighborhood(g, part[i], comp) == outside;
            if (uniform) buckets[outside].push_back(part);
        }
        const std::vector<VertexSet>* best = nullptr;
        for (auto& [outside, bucket] : buckets) {
            if (bucket.size() < needed) continue;
            std::sort(bucket.begin(), bucket.end(),
                      [](const VertexSet& a, const VertexSet& b) {
                          return a.front() < b.front();
                      });
            if (!best || bucket.front().front() < best->front().front())
                best = &bucket;
        }
        if (best)
            return std::vector<VertexSet>(best->begin(),
                                          best->begin() + static_cast<long>(needed));
    }
    return std::nullopt;
}

std::pair<Instance, RuleApplication> apply_rule2(const Instance& inst,
                                                 const std::vector<VertexSet>& parts) {
    if (static_cast<int>(parts.size()) < inst.budget + 5)
        throw std::invalid_argument("rule 2 witness has fewer than k+5 parts");
    VertexSet all;
    for (const VertexSet& part : parts) {
        if (part.empty()) throw std::invalid_argument("rule 2 witness has empty part");
        for (VertexId v : part) {
            if (!inst.graph.has_vertex(v))
                throw std::invalid_argument("rule 2 witness mentions unknown vertex");
            if (set_contains(all, v))
                throw std::invalid_argument("rule 2 witness parts overlap");
            all = set_union(all, {v});
        }
    }
    // Cross-part pairs adjacent, within-part pairs not.
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j)
            for (VertexId u : parts[i])
                for (VertexId v : parts[j]) {
                    if (u >= v && i == j) continue;
                    bool want = i != j;
                    if (u != v && inst.graph.has_edge(u, v) != want)
                        throw std::invalid_argument(
                            "rule 2 witness is not complete multipartite");
                }

    auto smallest = std::min_element(
        parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.front() < b.front();
        });
    RuleApplication app{2, all, *smallest, {}, 0};
    return {Instance{inst.graph.remove_vertices(*smallest), inst.budget}, app};
}

std::optional<VertexPair> find_rule3(const Graph& g, int k, const VertexSet& s) {
    VertexSet tf = triangle_free_vertices(g, s);
    if (tf.empty()) return std::nullopt;
    const int threshold = 4 * k + 6;
    for (auto [u, v] : g.edges()) {
        VertexSet common = set_intersection(common_neighbors(g, u, v), tf);
        if (static_cast<int>(common.size()) > threshold) return VertexPair{u, v};
    }
    return std::nullopt;
}

std::pair<Instance, RuleApplication> apply_rule3(const Instance& inst, VertexId u,
                                                 VertexId v) {
    if (!inst.graph.has_vertex(u) || !inst.graph.has_vertex(v) ||
        !inst.graph.has_edge(u, v))
        throw std::invalid_argument("rule 3 witness is not an edge");
    VertexPair e = ordered_pair(u, v);
    RuleApplication app{3, {e.first, e.second}, {}, {e}, -1};
    return {Instance{inst.graph.remove_edges({e}), inst.budget - 1}, app};
}

std::optional<std::pair<VertexSet, VertexSet>> find_rule4(const Graph& g, int k,
                                                          const VertexSet& s) {
    const std::size_t limit = static_cast<std::size_t>(3 * k + 3);
    Graph rest = g.remove_vertices(s);
    for (const VertexSet& comp : connected_components(rest)) {
        auto parts = multipartite_parts(rest, comp);
        if (!parts) continue;
        for (const VertexSet& part : *parts)
            if (part.size() > limit) return std::pair{comp, part};
    }
    return std::nullopt;
}

std::optional<std::pair<Instance, RuleApplication>> apply_rule4(
    const Instance& inst, const VertexSet& comp, const VertexSet& big_part) {
    for (VertexId v : comp)
        if (!inst.graph.has_vertex(v))
            throw std::invalid_argument("rule 4 witness mentions unknown vertex");
    for (VertexId v : big_part)
        if (!set_contains(comp, v))
            throw std::invalid_argument("rule 4 part is not inside its component");
    if (static_cast<int>(big_part.size()) <= 3 * inst.budget + 3)
        throw std::invalid_argument("rule 4 part is not larger than 3k+3");

    VertexSet others = set_difference(comp, big_part);
    std::vector<VertexPair> cross;
    for (std::size_t i = 0; i < others.size(); ++i)
        for (std::size_t j = i + 1; j < others.size(); ++j)
            if (inst.graph.has_edge(others[i], others[j]))
                cross.emplace_back(others[i], others[j]);

    if (static_cast<int>(cross.size()) > inst.budget) return std::nullopt;

    RuleApplication app{4, comp, {}, cross, -static_cast<int>(cross.size())};
    return std::pair{
        Instance{inst.graph.remove_edges(cross), inst.budget - static_cast<int>(cross.size())},
        app};
}

}  // namespace pawkit
