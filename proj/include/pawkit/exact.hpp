#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pawkit/graph.hpp"

namespace pawkit {

/// Which pairs a solution may toggle: Deletion only pairs currently in E,
/// Addition only pairs not in E, Editing all pairs.
enum class Mode { Editing, Deletion, Addition };

std::string to_string(Mode mode);
/// Accepts "edit", "delete", "add".
std::optional<Mode> mode_from_string(std::string_view name);

/// Bounded-depth branching on the pairs of a found paw: any solution must
/// change at least one of the six pairs inside each induced paw, so the
/// branching factor is 6 (editing), 4 (deletion: the paw edges) or
/// 2 (addition: the two missing pairs). Pairs toggled along a branch stay
/// frozen. Returns an edit set of size <= budget making the graph paw-free,
/// or nullopt.
std::optional<EditSet> solve(const Instance& inst, Mode mode);

/// Enumerates every eligible pair subset of size <= budget in deterministic
/// order (size ascending, then lexicographic) and returns the first that
/// works. Test oracle; intended for small instances.
std::optional<EditSet> solve_exhaustive(const Instance& inst, Mode mode);

/// True iff |edits| <= k, the edits respect the mode, and applying them
/// leaves the graph paw-free.
bool verify_solution(const Graph& g, const EditSet& edits, int k, Mode mode);

}  // namespace pawkit
