#include "pawkit/kernel.hpp"

#include <algorithm>

#include "pawkit/packing.hpp"
#include "pawkit/recognition.hpp"

namespace pawkit {

std::map<int, int> KernelTrace::rule_counts() const {
    std::map<int, int> counts;
    for (const TraceEntry& e : entries)
        if (const auto* rule = std::get_if<RuleApplication>(&e)) ++counts[rule->rule_id];
    return counts;
}

int KernelTrace::component_removals() const {
    int count = 0;
    for (const TraceEntry& e : entries)
        if (std::holds_alternative<ComponentRemoval>(e)) ++count;
    return count;
}

long long editing_size_certificate(int k, int depth) {
    long long kk = std::max(k, 0);
    long long bound = 4 * kk + 4 * kk * (3 * kk + 3) * (3 * kk + 5) +
                      4 * kk * (4 * kk + 6) + 16 * kk * kk * (4 * kk + 6);
    long long layer = 4 * kk;
    for (int i = 1; i <= depth; ++i) {
        layer *= 4 * kk + 6;
        bound += layer;
    }
    return bound;
}

long long deletion_size_certificate(int k) { return editing_size_certificate(k, 1); }

long long addition_size_certificate(int k) {
    long long kk = std::max(k, 0);
    return 4 * kk * (3 * kk + 3) * (3 * kk + 5) + (4 * kk + 6) * kk + 4 * kk;
}

namespace {

long long certificate_for(Mode mode, int k, int depth) {
    switch (mode) {
        case Mode::Editing: return editing_size_certificate(k, depth);
        case Mode::Deletion: return deletion_size_certificate(k);
        case Mode::Addition: return addition_size_certificate(k);
    }
    return 0;
}

[[noreturn]] void unclassifiable_component() {
    throw std::logic_error(
        "component of G-S is neither triangle-free nor complete multipartite; "
        "packing is not maximal");
}

std::vector<VertexSet> multipartite_components(const Graph& g, const VertexSet& s) {
    Graph rest = g.remove_vertices(s);
    std::vector<VertexSet> out;
    for (const VertexSet& comp : connected_components(rest)) {
        auto cls = classify_component(rest, comp);
        if (!cls) unclassifiable_component();
        if (cls->kind == ComponentKind::CompleteMultipartite) out.push_back(comp);
    }
    return out;
}

bool adjacent_to_set(const Graph& g, const VertexSet& comp, const VertexSet& s) {
    for (VertexId v : comp)
        for (VertexId w : g.neighbors(v))
            if (set_contains(s, w)) return true;
    return false;
}

}  // namespace

std::optional<VertexSet> compute_s_prime(const Graph& g, int k, const VertexSet& s) {
    Graph rest = g.remove_vertices(s);
    VertexSet result;
    for (const VertexSet& comp : connected_components(rest)) {
        auto cls = classify_component(rest, comp);
        if (!cls) unclassifiable_component();
        if (cls->kind != ComponentKind::TriangleFree) continue;

        // Does some edge of the component complete a triangle with exactly
        // one vertex of s?
        bool qualifies = false;
        for (VertexId x : comp) {
            for (VertexId y : rest.neighbors(x)) {
                if (y <= x) continue;
                if (!set_intersection(common_neighbors(g, x, y), s).empty()) {
                    qualifies = true;
                    break;
                }
            }
            if (qualifies) break;
        }
        if (!qualifies) continue;

        // Greedy maximal matching over the component's edges in
        // lexicographic order.
        VertexSet matched;
        int matching_size = 0;
        for (VertexId x : comp) {
            if (set_contains(matched, x)) continue;
            for (VertexId y : rest.neighbors(x)) {
                if (y <= x || set_contains(matched, y)) continue;
                matched = set_union(matched, VertexSet{x, y});
                ++matching_size;
                break;
            }
        }
        if (matching_size > k) {
            if (static_cast<int>(comp.size()) >= 4 * k + 6) return std::nullopt;
            result = set_union(result, comp);
        } else {
            result = set_union(result, matched);
        }
    }
    return result;
}

VertexSet compute_s_dprime(const Graph& g, int k, const VertexSet& s) {
    (void)k;
    VertexSet out;
    for (VertexId v : triangle_free_vertices(g, s)) {
        VertexSet anchors = set_intersection(g.neighbors(v), s);
        bool found = false;
        for (std::size_t i = 0; i < anchors.size() && !found; ++i)
            for (std::size_t j = i + 1; j < anchors.size() && !found; ++j)
                if (g.has_edge(anchors[i], anchors[j])) found = true;
        if (found) out.push_back(v);
    }
    return out;
}

MarkedSets mark_layers(const Graph& g, int k, const VertexSet& s, int depth) {
    if (depth < 1) throw std::invalid_argument("marking depth must be at least 1");
    MarkedSets marked;
    marked.layers.push_back(s);

    VertexSet tf = triangle_free_vertices(g, s);
    auto by_distance = distance_layers(g, s, depth);
    const std::size_t width = static_cast<std::size_t>(4 * std::max(k, 0) + 6);

    for (int i = 0; i < depth; ++i) {
        auto ring = by_distance.find(i + 1);
        if (ring == by_distance.end()) break;
        VertexSet next;
        for (VertexId x : marked.layers.back()) {
            VertexSet picked;
            for (VertexId w : g.neighbors(x)) {
                if (picked.size() == width) break;
                if (set_contains(ring->second, w) && set_contains(tf, w))
                    picked.push_back(w);
            }
            next = set_union(next, picked);
        }
        if (next.empty()) break;
        marked.layers.push_back(std::move(next));
    }
    return marked;
}

namespace {

struct PipelineRun {
    Graph g;
    int k;
    KernelTrace trace;
    PawPacking packing;
};

KernelResult no_result(PipelineRun&& run, Mode mode, int depth) {
    return KernelResult{KernelOutcome::No, Instance{Graph{}, run.k},
                        std::move(run.trace),
                        certificate_for(mode, std::max(run.k, 0), depth)};
}

void apply(PipelineRun& run, std::pair<Instance, RuleApplication> applied) {
    run.g = std::move(applied.first.graph);
    run.k = applied.first.budget;
    run.trace.entries.push_back(std::move(applied.second));
}

KernelResult run_pipeline(const Instance& inst, Mode mode, int depth) {
    if (inst.budget < 0) throw std::invalid_argument("negative budget");
    PipelineRun run{inst.graph, inst.budget, {}, {}};

    for (;;) {
        bool changed = false;

        // A paw-free component never matters again in any mode: solutions
        // restricted to the other components stay solutions and vice versa.
        VertexSet removable;
        for (const VertexSet& comp : connected_components(run.g))
            if (classify_component(run.g, comp))
                removable = set_union(removable, comp);
        if (!removable.empty()) {
            run.g = run.g.remove_vertices(removable);
            run.trace.entries.push_back(ComponentRemoval{std::move(removable)});
            changed = true;
        }

        while (auto x = find_rule1(run.g, run.k)) {
            apply(run, apply_rule1({run.g, run.k}, *x));
            changed = true;
        }

        run.packing =
            greedy_paw_packing(run.g, static_cast<std::size_t>(run.k) + 1);
        if (packing_exceeds(run.packing, run.k))
            return no_result(std::move(run), mode, depth);
        const VertexSet& s = run.packing.s;

        if (auto uv = find_rule3(run.g, run.k, s)) {
            // In addition mode an applicable edge-removing rule already
            // certifies a no-instance.
            if (mode == Mode::Addition) return no_result(std::move(run), mode, depth);
            apply(run, apply_rule3({run.g, run.k}, uv->first, uv->second));
            if (run.k < 0) return no_result(std::move(run), mode, depth);
            continue;
        }
        if (auto big = find_rule4(run.g, run.k, s)) {
            if (mode == Mode::Addition) return no_result(std::move(run), mode, depth);
            auto applied = apply_rule4({run.g, run.k}, big->first, big->second);
            if (!applied) return no_result(std::move(run), mode, depth);
            apply(run, std::move(*applied));
            continue;
        }

        // An oversized complete multipartite component of G-S either admits
        // the part-bucket rule or certifies a no-instance.
        const long long size_limit = (3LL * run.k + 3) * (3LL * run.k + 5);
        bool oversized = false;
        for (const VertexSet& comp : multipartite_components(run.g, s))
            if (static_cast<long long>(comp.size()) >= size_limit) {
                oversized = true;
                break;
            }
        if (oversized) {
            if (auto parts = find_rule2(run.g, run.k, s)) {
                apply(run, apply_rule2({run.g, run.k}, *parts));
                continue;
            }
            return no_result(std::move(run), mode, depth);
        }

        if (!changed) break;
    }

    const VertexSet& s = run.packing.s;
    auto mcomps = multipartite_components(run.g, s);

    for (VertexId v : s) {
        int touched = 0;
        for (const VertexSet& comp : mcomps) {
            for (VertexId w : run.g.neighbors(v))
                if (set_contains(comp, w)) {
                    ++touched;
                    break;
                }
        }
        if (touched > 1)
            throw std::logic_error(
                "internal invariant violated: packing vertex " + std::to_string(v) +
                " is adjacent to " + std::to_string(touched) +
                " complete multipartite components of G-S");
    }

    if (mode == Mode::Addition) {
        // Each remaining component must become complete multipartite, so
        // its triangle-free remainder outside S is capped.
        VertexSet tf = triangle_free_vertices(run.g, s);
        for (const VertexSet& comp : connected_components(run.g))
            if (static_cast<int>(set_intersection(comp, tf).size()) > 4 * run.k + 6)
                return no_result(std::move(run), mode, depth);
        run.trace.entries.push_back(MarkingRecord{"kept", run.g.vertices()});
        return KernelResult{KernelOutcome::Reduced, Instance{run.g, run.k},
                            std::move(run.trace), addition_size_certificate(run.k)};
    }

    auto s_prime = compute_s_prime(run.g, run.k, s);
    if (!s_prime) return no_result(std::move(run), mode, depth);
    VertexSet s_dprime = compute_s_dprime(run.g, run.k, s);
    const int mark_depth = mode == Mode::Deletion ? 1 : depth;
    MarkedSets marked = mark_layers(run.g, run.k, s, mark_depth);
    marked.s_prime = *s_prime;
    marked.s_dprime = s_dprime;

    VertexSet multipartite_kept;
    for (const VertexSet& comp : mcomps) {
        // Deletion keeps every complete multipartite component; editing
        // keeps those adjacent to S. After paw-free component removal the
        // two agree, since every surviving component meets S.
        if (mode == Mode::Deletion || adjacent_to_set(run.g, comp, s))
            multipartite_kept = set_union(multipartite_kept, comp);
    }

    VertexSet keep = set_union(s, *s_prime);
    keep = set_union(keep, s_dprime);
    for (const VertexSet& layer : marked.layers) keep = set_union(keep, layer);
    keep = set_union(keep, multipartite_kept);

    run.trace.entries.push_back(MarkingRecord{"packing", s});
    run.trace.entries.push_back(MarkingRecord{"s_prime", *s_prime});
    run.trace.entries.push_back(MarkingRecord{"s_dprime", s_dprime});
    for (std::size_t i = 1; i < marked.layers.size(); ++i)
        run.trace.entries.push_back(
            MarkingRecord{"layer_" + std::to_string(i), marked.layers[i]});
    run.trace.entries.push_back(
        MarkingRecord{"multipartite_components", multipartite_kept});
    run.trace.entries.push_back(MarkingRecord{"kept", keep});

    for (const auto& t : list_triangles(run.g))
        if (!set_contains(keep, t[0]) || !set_contains(keep, t[1]) ||
            !set_contains(keep, t[2]))
            throw std::logic_error(
                "internal invariant violated: a triangle of the reduced graph "
                "lost a vertex in the marking cut");

    return KernelResult{
        KernelOutcome::Reduced, Instance{induced_subgraph(run.g, keep), run.k},
        std::move(run.trace),
        mode == Mode::Deletion ? deletion_size_certificate(run.k)
                               : editing_size_certificate(run.k, depth)};
}

}  // namespace

KernelResult kernelize_editing(const Instance& inst, int depth) {
    return run_pipeline(inst, Mode::Editing, depth);
}

KernelResult kernelize_deletion(const Instance& inst) {
    return run_pipeline(inst, Mode::Deletion, 1);
}

KernelResult kernelize_addition(const Instance& inst) {
    return run_pipeline(inst, Mode::Addition, 1);
}

KernelResult kernelize(const Instance& inst, Mode mode, int depth) {
    switch (mode) {
        case Mode::Editing: return kernelize_editing(inst, depth);
        case Mode::Deletion: return kernelize_deletion(inst);
        case Mode::Addition: return kernelize_addition(inst);
    }
    throw std::invalid_argument("unknown mode");
}

Instance replay_reductions(const Instance& input, const KernelTrace& trace) {
    Graph g = input.graph;
    int k = input.budget;
    for (const TraceEntry& entry : trace.entries) {
        if (const auto* rule = std::get_if<RuleApplication>(&entry)) {
            if (!rule->removed_vertices.empty())
                g = g.remove_vertices(rule->removed_vertices);
            if (!rule->removed_edges.empty()) g = g.remove_edges(rule->removed_edges);
            k += rule->budget_delta;
        } else if (const auto* removal = std::get_if<ComponentRemoval>(&entry)) {
            g = g.remove_vertices(removal->removed_vertices);
        }
    }
    return Instance{g, k};
}

Instance replay_trace(const Instance& input, const KernelTrace& trace) {
    Instance pre = replay_reductions(input, trace);
    const MarkingRecord* kept = nullptr;
    for (const TraceEntry& entry : trace.entries)
        if (const auto* mark = std::get_if<MarkingRecord>(&entry))
            if (mark->label == "kept") kept = mark;
    if (!kept) return pre;
    return Instance{induced_subgraph(pre.graph, kept->vertices), pre.budget};
}

namespace {

nlohmann::ordered_json pairs_to_json(const std::vector<VertexPair>& pairs) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : pairs) arr.push_back(nlohmann::ordered_json::array({u, v}));
    return arr;
}

std::vector<VertexPair> pairs_from_json(const nlohmann::json& arr) {
    std::vector<VertexPair> pairs;
    for (const auto& e : arr) pairs.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    return pairs;
}

}  // namespace

nlohmann::ordered_json trace_entry_to_json(const TraceEntry& entry) {
    nlohmann::ordered_json j;
    if (const auto* rule = std::get_if<RuleApplication>(&entry)) {
        j["type"] = "rule";
        j["rule"] = rule->rule_id;
        j["witness"] = rule->witness;
        j["removed_vertices"] = rule->removed_vertices;
        j["removed_edges"] = pairs_to_json(rule->removed_edges);
        j["budget_delta"] = rule->budget_delta;
    } else if (const auto* removal = std::get_if<ComponentRemoval>(&entry)) {
        j["type"] = "component_removal";
        j["removed_vertices"] = removal->removed_vertices;
    } else {
        const auto& mark = std::get<MarkingRecord>(entry);
        j["type"] = "marking";
        j["label"] = mark.label;
        j["vertices"] = mark.vertices;
    }
    return j;
}

nlohmann::ordered_json kernel_result_to_json(const KernelResult& result) {
    nlohmann::ordered_json j;
    j["outcome"] = result.outcome == KernelOutcome::Reduced ? "reduced" : "no";
    j["k_out"] = result.reduced.budget;
    j["vertices"] = result.reduced.graph.vertices();
    j["edges"] = pairs_to_json(result.reduced.graph.edges());
    auto trace = nlohmann::ordered_json::array();
    for (const TraceEntry& entry : result.trace.entries)
        trace.push_back(trace_entry_to_json(entry));
    j["trace"] = std::move(trace);
    j["size_certificate"] = result.size_certificate;
    return j;
}

KernelResult kernel_result_from_json(const nlohmann::json& j) {
    KernelResult result;
    result.outcome = j.at("outcome").get<std::string>() == "reduced"
                         ? KernelOutcome::Reduced
                         : KernelOutcome::No;
    auto vertices = j.at("vertices").get<std::vector<VertexId>>();
    result.reduced.graph =
        Graph::from_parts(std::move(vertices), pairs_from_json(j.at("edges")));
    result.reduced.budget = j.at("k_out").get<int>();
    result.size_certificate = j.at("size_certificate").get<long long>();
    for (const auto& e : j.at("trace")) {
        std::string type = e.at("type").get<std::string>();
        if (type == "rule") {
            RuleApplication rule;
            rule.rule_id = e.at("rule").get<int>();
            rule.witness = e.at("witness").get<VertexSet>();
            rule.removed_vertices = e.at("removed_vertices").get<VertexSet>();
            rule.removed_edges = pairs_from_json(e.at("removed_edges"));
            rule.budget_delta = e.at("budget_delta").get<int>();
            result.trace.entries.push_back(std::move(rule));
        } else if (type == "component_removal") {
            result.trace.entries.push_back(
                ComponentRemoval{e.at("removed_vertices").get<VertexSet>()});
        } else if (type == "marking") {
            result.trace.entries.push_back(MarkingRecord{
                e.at("label").get<std::string>(), e.at("vertices").get<VertexSet>()});
        } else {
            throw std::invalid_argument("unknown trace entry type: " + type);
        }
    }
    return result;
}

}  // namespace pawkit
