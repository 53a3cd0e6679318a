#pragma once

#include <optional>
#include <string>

#include "pawkit/graph.hpp"

namespace pawkit {

/// Audit record of one reduction-rule application.
struct RuleApplication {
    int rule_id = 0;  // 1..4
    VertexSet witness;
    VertexSet removed_vertices;
    std::vector<VertexPair> removed_edges;
    int budget_delta = 0;  // 0 for rules 1-2, -1 for rule 3, -(edges removed) for rule 4

    /// `rule=<id> witness=<ids> removed_v=<ids> removed_e=<pairs> dk=<delta>`
    std::string to_line() const;

    bool operator==(const RuleApplication&) const = default;
};

// Rule 1: an independent set of k+3 vertices sharing one open neighborhood
// (equal open neighborhoods force independence); remove one of them.
std::optional<VertexSet> find_rule1(const Graph& g, int k);
std::pair<Instance, RuleApplication> apply_rule1(const Instance& inst,
                                                 const VertexSet& x);

// Rule 2: k+5 parts of a complete multipartite component of G-S whose
// vertices all share one neighborhood outside the component; remove the
// smallest part.
std::optional<std::vector<VertexSet>> find_rule2(const Graph& g, int k,
                                                 const VertexSet& s);
std::pair<Instance, RuleApplication> apply_rule2(const Instance& inst,
                                                 const std::vector<VertexSet>& parts);

// Rule 3: an adjacent pair with strictly more than 4k+6 common neighbors in
// the triangle-free components of G-S; remove the edge and decrement the
// budget.
std::optional<VertexPair> find_rule3(const Graph& g, int k, const VertexSet& s);
std::pair<Instance, RuleApplication> apply_rule3(const Instance& inst, VertexId u,
                                                 VertexId v);

// Rule 4: a complete multipartite component of G-S with a part larger than
// 3k+3; remove every edge among the other parts, decreasing the budget by
// the number removed. Returns nullopt (no-instance) when that number
// exceeds the budget.
std::optional<std::pair<VertexSet, VertexSet>> find_rule4(const Graph& g, int k,
                                                          const VertexSet& s);
std::optional<std::pair<Instance, RuleApplication>> apply_rule4(
    const Instance& inst, const VertexSet& comp, const VertexSet& big_part);

}  // namespace pawkit
