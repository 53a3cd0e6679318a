#include "pawkit/exact.hpp"

#include <algorithm>
#include <set>

#include "pawkit/recognition.hpp"

namespace pawkit {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Editing: return "edit";
        case Mode::Deletion: return "delete";
        case Mode::Addition: return "add";
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view name) {
    if (name == "edit") return Mode::Editing;
    if (name == "delete") return Mode::Deletion;
    if (name == "add") return Mode::Addition;
    return std::nullopt;
}

namespace {

std::vector<VertexPair> branch_pairs(const Paw& paw, Mode mode) {
    std::vector<VertexPair> pairs;
    switch (mode) {
        case Mode::Editing: {
            auto all = paw.all_pairs();
            pairs.assign(all.begin(), all.end());
            break;
        }
        case Mode::Deletion: {
            auto e = paw.paw_edges();
            pairs.assign(e.begin(), e.end());
            break;
        }
        case Mode::Addition: {
            auto m = paw.missing_pairs();
            pairs.assign(m.begin(), m.end());
            break;
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool branch(const Graph& g, int budget, Mode mode, std::set<VertexPair>& frozen,
            std::vector<VertexPair>& toggled) {
    auto paw = find_paw(g);
    if (!paw) return true;
    if (budget <= 0) return false;
    for (VertexPair p : branch_pairs(*paw, mode)) {
        if (frozen.contains(p)) continue;
        frozen.insert(p);
        toggled.push_back(p);
        Graph next = apply_edits(g, EditSet{{p}});
        if (branch(next, budget - 1, mode, frozen, toggled)) return true;
        toggled.pop_back();
        frozen.erase(p);
    }
    return false;
}

std::vector<VertexPair> eligible_pairs(const Graph& g, Mode mode) {
    std::vector<VertexPair> pairs;
    const VertexSet& vs = g.vertices();
    switch (mode) {
        case Mode::Editing:
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    pairs.emplace_back(vs[i], vs[j]);
            break;
        case Mode::Deletion:
            pairs = g.edges();
            break;
        case Mode::Addition:
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (!g.has_edge(vs[i], vs[j])) pairs.emplace_back(vs[i], vs[j]);
            break;
    }
    return pairs;
}

// Size-ascending, then lexicographic subset enumeration.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t r = idx.size();
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (idx[i] + (r - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<EditSet> solve(const Instance& inst, Mode mode) {
    if (inst.budget < 0) return std::nullopt;
    std::set<VertexPair> frozen;
    std::vector<VertexPair> toggled;
    if (branch(inst.graph, inst.budget, mode, frozen, toggled))
        return EditSet{toggled};
    return std::nullopt;
}

std::optional<EditSet> solve_exhaustive(const Instance& inst, Mode mode) {
    if (inst.budget < 0) return std::nullopt;
    if (is_paw_free(inst.graph)) return EditSet{};
    std::vector<VertexPair> pool = eligible_pairs(inst.graph, mode);
    int max_size = std::min<int>(inst.budget, static_cast<int>(pool.size()));
    for (int size = 1; size <= max_size; ++size) {
        std::vector<std::size_t> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = static_cast<std::size_t>(i);
        do {
            std::vector<VertexPair> subset;
            subset.reserve(size);
            for (std::size_t i : idx) subset.push_back(pool[i]);
            EditSet edits{subset};
            if (is_paw_free(apply_edits(inst.graph, edits))) return edits;
        } while (next_combination(idx, pool.size()));
    }
    return std::nullopt;
}

bool verify_solution(const Graph& g, const EditSet& edits, int k, Mode mode) {
    if (static_cast<int>(edits.size()) > k) return false;
    for (auto [u, v] : edits.pairs()) {
        if (!g.has_vertex(u) || !g.has_vertex(v)) return false;
        if (mode == Mode::Deletion && !g.has_edge(u, v)) return false;
        if (mode == Mode::Addition && g.has_edge(u, v)) return false;
    }
    return is_paw_free(apply_edits(g, edits));
}

}  // namespace pawkit
