#include "doctest.h"

#include "pawkit/exact.hpp"
#include "pawkit/generator.hpp"
#include "pawkit/recognition.hpp"
#include "support/oracles.hpp"

using namespace pawkit;

namespace {

Graph single_paw() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

}  // namespace

TEST_CASE("solve on a single paw") {
    // deletion: at least one single-edge removal works; dropping the pendant
    // edge leaves a triangle plus an isolated vertex
    bool some_single_deletion_works = false;
    for (auto e : find_paw(single_paw())->paw_edges()) {
        Graph without = single_paw().remove_edges({e});
        if (testing::is_paw_free_naive(without)) some_single_deletion_works = true;
    }
    CHECK(some_single_deletion_works);
    CHECK(testing::is_paw_free_naive(single_paw().remove_edges({{2, 3}})));

    auto deletion = solve({single_paw(), 1}, Mode::Deletion);
    REQUIRE(deletion.has_value());
    CHECK(deletion->size() == 1);
    CHECK(verify_solution(single_paw(), *deletion, 1, Mode::Deletion));

    for (Mode mode : {Mode::Editing, Mode::Deletion, Mode::Addition})
        CHECK_FALSE(solve({single_paw(), 0}, mode).has_value());

    Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (Mode mode : {Mode::Editing, Mode::Deletion, Mode::Addition}) {
        auto edits = solve({c4, 2}, mode);
        REQUIRE(edits.has_value());
        CHECK(edits->empty());
    }
}

TEST_CASE("solve_exhaustive on a single paw in addition mode") {
    // one of the two missing pairs must fix the paw; cross-check each
    auto missing = find_paw(single_paw())->missing_pairs();
    bool some_single_addition_works = false;
    for (auto p : missing)
        if (testing::is_paw_free_naive(apply_edits(single_paw(), EditSet{{p}})))
            some_single_addition_works = true;
    CHECK(some_single_addition_works);

    auto addition = solve_exhaustive({single_paw(), 1}, Mode::Addition);
    REQUIRE(addition.has_value());
    CHECK(addition->size() == 1);
    CHECK(verify_solution(single_paw(), *addition, 1, Mode::Addition));

    auto empty = solve_exhaustive({Graph{}, 0}, Mode::Editing);
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
}

TEST_CASE("branching and exhaustive solvers agree on random graphs") {
    SplitMix64 rng(8080);
    for (int round = 0; round < 250; ++round) {
        int n = 4 + static_cast<int>(rng.next_below(3));
        Instance inst = generate({rng.next(), 0, UniformFamily{n, 0.4}});
        int k = static_cast<int>(rng.next_below(3));
        for (Mode mode : {Mode::Editing, Mode::Deletion, Mode::Addition}) {
            auto branched = solve({inst.graph, k}, mode);
            auto enumerated = solve_exhaustive({inst.graph, k}, mode);
            CHECK(branched.has_value() == enumerated.has_value());
            if (branched) CHECK(verify_solution(inst.graph, *branched, k, mode));
            if (enumerated) CHECK(verify_solution(inst.graph, *enumerated, k, mode));
        }
    }
}

TEST_CASE("yes answers are monotone in the budget and nest across modes") {
    SplitMix64 rng(3333);
    for (int round = 0; round < 120; ++round) {
        Instance inst = generate({rng.next(), 0, UniformFamily{6, 0.45}});
        for (int k = 0; k <= 1; ++k) {
            for (Mode mode : {Mode::Editing, Mode::Deletion, Mode::Addition})
                if (solve({inst.graph, k}, mode).has_value())
                    CHECK(solve({inst.graph, k + 1}, mode).has_value());
            for (Mode mode : {Mode::Deletion, Mode::Addition})
                if (solve({inst.graph, k}, mode).has_value())
                    CHECK(solve({inst.graph, k}, Mode::Editing).has_value());
        }
    }
}

TEST_CASE("verify_solution checks budget, mode and paw-freeness") {
    CHECK(verify_solution(single_paw(), EditSet::single(2, 3), 1, Mode::Deletion));
    CHECK_FALSE(verify_solution(single_paw(), EditSet{}, 1, Mode::Editing));
    CHECK_FALSE(
        verify_solution(single_paw(), EditSet({{0, 3}, {1, 3}}), 1, Mode::Editing));
    // mode violations
    CHECK_FALSE(verify_solution(single_paw(), EditSet::single(0, 3), 1, Mode::Deletion));
    CHECK_FALSE(verify_solution(single_paw(), EditSet::single(2, 3), 1, Mode::Addition));
}

TEST_CASE("solvers are deterministic") {
    SplitMix64 rng(11);
    for (int round = 0; round < 40; ++round) {
        Instance inst = generate({rng.next(), 2, UniformFamily{6, 0.4}});
        auto first = solve(inst, Mode::Editing);
        auto second = solve(inst, Mode::Editing);
        CHECK(first == second);
    }
}
