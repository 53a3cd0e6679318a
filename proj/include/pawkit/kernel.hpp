#pragma once

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "pawkit/exact.hpp"
#include "pawkit/rules.hpp"

namespace pawkit {

/// Bounded-width breadth-first selection of triangle-free-component
/// vertices near the packing set S.
struct MarkedSets {
    /// layers[0] = S; layers[i] holds the vertices marked at distance i.
    std::vector<VertexSet> layers;
    /// Vertices retained from triangle-free components that contain a
    /// triangle through exactly one packing vertex.
    VertexSet s_prime;
    /// Triangle-free-component vertices adjacent to two adjacent packing
    /// vertices.
    VertexSet s_dprime;
};

/// Removal of paw-free components (safe in every mode: a paw lives inside
/// one component).
struct ComponentRemoval {
    VertexSet removed_vertices;
    bool operator==(const ComponentRemoval&) const = default;
};

/// Snapshot of a marking step; the entry labelled "kept" lists the vertex
/// set the kernel is induced on.
struct MarkingRecord {
    std::string label;
    VertexSet vertices;
    bool operator==(const MarkingRecord&) const = default;
};

using TraceEntry = std::variant<RuleApplication, ComponentRemoval, MarkingRecord>;

/// Ordered record of every rule application and marking step; replaying it
/// from the input instance reproduces the output instance.
struct KernelTrace {
    std::vector<TraceEntry> entries;
    std::map<int, int> rule_counts() const;
    int component_removals() const;
};

enum class KernelOutcome { Reduced, No };

struct KernelResult {
    KernelOutcome outcome = KernelOutcome::No;
    /// On Reduced: the kernel instance. On No: an empty graph; budget holds
    /// the budget at the point the pipeline stopped (may be -1 when an edge
    /// removal drove it negative).
    Instance reduced;
    KernelTrace trace;
    long long size_certificate = 0;
};

// Vertex-count bounds the pipelines guarantee, evaluated at the output
// budget: 4k + 4k(3k+3)(3k+5) + 4k(4k+6) + 16k^2(4k+6) + sum_{i=1..D} 4k(4k+6)^i
// for editing (deletion is the same with D=1) and
// 4k(3k+3)(3k+5) + (4k+6)k + 4k for addition.
long long editing_size_certificate(int k, int depth);
long long deletion_size_certificate(int k);
long long addition_size_certificate(int k);

/// For each triangle-free component C of g - s containing a vertex in a
/// triangle with exactly one vertex of s: contributes the vertices of a
/// maximal matching M of C when |M| <= k, all of C otherwise. Returns
/// nullopt (no-instance) when |M| > k and |C| >= 4k+6.
std::optional<VertexSet> compute_s_prime(const Graph& g, int k, const VertexSet& s);

/// Vertices in triangle-free components of g - s adjacent to two adjacent
/// vertices of s.
VertexSet compute_s_dprime(const Graph& g, int k, const VertexSet& s);

/// layers[0] = s; layer i+1 picks, for every vertex of layer i, up to 4k+6
/// lowest-id neighbors at distance exactly i+1 from s that lie in
/// triangle-free components of g - s. Stops at `depth` or at the first
/// empty layer.
MarkedSets mark_layers(const Graph& g, int k, const VertexSet& s, int depth);

KernelResult kernelize_editing(const Instance& inst, int depth = 6);
KernelResult kernelize_deletion(const Instance& inst);
KernelResult kernelize_addition(const Instance& inst);
KernelResult kernelize(const Instance& inst, Mode mode, int depth = 6);

/// Applies the trace to `input`: rule applications and component removals
/// transform the graph; the final "kept" marking record induces the kernel.
Instance replay_trace(const Instance& input, const KernelTrace& trace);
/// Applies only rule applications and component removals, yielding the
/// graph as it stood before the marking cut.
Instance replay_reductions(const Instance& input, const KernelTrace& trace);

nlohmann::ordered_json trace_entry_to_json(const TraceEntry& entry);
nlohmann::ordered_json kernel_result_to_json(const KernelResult& result);
KernelResult kernel_result_from_json(const nlohmann::json& j);

}  // namespace pawkit
