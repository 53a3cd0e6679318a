#include "doctest.h"

#include "pawkit/generator.hpp"
#include "pawkit/recognition.hpp"
#include "support/oracles.hpp"

using namespace pawkit;

namespace {

Graph single_paw() {
    // triangle {0,1,2} with pendant 3 attached at 2
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

Graph k4() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph diamond() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph c5() {
    return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

bool classifies_paw_free(const Graph& g) {
    for (const VertexSet& comp : connected_components(g))
        if (!classify_component(g, comp)) return false;
    return true;
}

}  // namespace

TEST_CASE("find_paw on the paw itself") {
    auto paw = find_paw(single_paw());
    REQUIRE(paw.has_value());
    CHECK(paw->triangle == std::array<VertexId, 3>{0, 1, 2});
    CHECK(paw->pendant == 3);
    CHECK(paw->vertices() == VertexSet{0, 1, 2, 3});
}

TEST_CASE("find_paw negative cases") {
    CHECK_FALSE(find_paw(c5()).has_value());
    // K4 spans only one 4-set and it is not a paw (checked by enumeration)
    CHECK(testing::all_induced_paws(k4()).empty());
    CHECK_FALSE(find_paw(k4()).has_value());
}

TEST_CASE("is_paw_free agrees with the structure of small graphs") {
    // diamond = complete tripartite on parts {0},{1},{2,3}
    CHECK(testing::is_paw_free_naive(diamond()));
    CHECK(is_paw_free(diamond()));

    Graph paw_plus = Graph::from_parts({0, 1, 2, 3, 9}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_paw_free(paw_plus));

    // bipartite graphs are triangle-free, hence paw-free
    Graph k33 = Graph::from_edge_list(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(is_paw_free(k33));
}

TEST_CASE("find_paw is deterministic and matches the naive oracle") {
    SplitMix64 rng(42);
    for (int round = 0; round < 300; ++round) {
        int n = 4 + static_cast<int>(rng.next_below(5));
        Instance inst = generate({rng.next(), 0, UniformFamily{n, 0.4}});
        auto found = find_paw(inst.graph);
        CHECK(found.has_value() == !testing::all_induced_paws(inst.graph).empty());
        if (found) {
            CHECK(testing::induces_paw(
                inst.graph, {found->triangle[0], found->triangle[1], found->triangle[2],
                             found->pendant}));
            auto again = find_paw(inst.graph);
            REQUIRE(again.has_value());
            CHECK(*again == *found);
        }
    }
}

TEST_CASE("classify_component on the three example shapes") {
    Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto cls = classify_component(c4, c4.vertices());
    REQUIRE(cls.has_value());
    CHECK(cls->kind == ComponentKind::TriangleFree);

    Graph octahedron = Graph::from_edge_list(
        6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
            {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    cls = classify_component(octahedron, octahedron.vertices());
    REQUIRE(cls.has_value());
    CHECK(cls->kind == ComponentKind::CompleteMultipartite);
    REQUIRE(cls->parts.size() == 3);
    for (const auto& part : cls->parts) CHECK(part.size() == 2);

    CHECK_FALSE(classify_component(single_paw(), single_paw().vertices()).has_value());
}

TEST_CASE("multipartite_parts finds the unique partition") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}});
    auto parts = multipartite_parts(k3, k3.vertices());
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 3);

    // K_{1,2,3}: parts sized 1, 2, 3 in ascending order
    Graph k123 = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                           {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    parts = multipartite_parts(k123, k123.vertices());
    REQUIRE(parts.has_value());
    REQUIRE(parts->size() == 3);
    CHECK((*parts)[0].size() == 1);
    CHECK((*parts)[1].size() == 2);
    CHECK((*parts)[2].size() == 3);

    CHECK_FALSE(multipartite_parts(c5(), c5().vertices()).has_value());

    // complete bipartite stays out: fewer than three parts
    Graph k22 = Graph::from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(multipartite_parts(k22, k22.vertices()).has_value());
}

TEST_CASE("multipartite parts: same part iff non-adjacent, cross pairs adjacent") {
    SplitMix64 rng(4242);
    int verified = 0;
    for (int round = 0; round < 200; ++round) {
        Instance inst =
            generate({rng.next(), 0, PlantedFamily{8, PlantedBase::Multipartite, 0}});
        for (const VertexSet& comp : connected_components(inst.graph)) {
            auto parts = multipartite_parts(inst.graph, comp);
            if (!parts) continue;
            ++verified;
            for (std::size_t i = 0; i < parts->size(); ++i)
                for (std::size_t j = i; j < parts->size(); ++j)
                    for (VertexId u : (*parts)[i])
                        for (VertexId v : (*parts)[j])
                            if (u != v)
                                CHECK(inst.graph.has_edge(u, v) == (i != j));
        }
    }
    CHECK(verified > 50);
}

TEST_CASE("structure equivalence on random graphs up to 8 vertices") {
    SplitMix64 rng(2024);
    for (int round = 0; round < 400; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Instance inst = generate({rng.next(), 0, UniformFamily{n, 0.15 + 0.1 * (round % 6)}});
        CHECK(is_paw_free(inst.graph) == classifies_paw_free(inst.graph));
    }
}

TEST_CASE("triangle_free_vertices unions the triangle-free components") {
    // paw with S covering everything
    CHECK(triangle_free_vertices(single_paw(), {0, 1, 2, 3}).empty());

    // G - S = C5 plus K4
    std::vector<VertexPair> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                     {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}};
    Graph g = Graph::from_edge_list(9, edges);
    CHECK(triangle_free_vertices(g, {}) == VertexSet{0, 1, 2, 3, 4});

    CHECK(triangle_free_vertices(k4(), k4().vertices()).empty());
}

TEST_CASE("triangle_free_vertices rejects a non-hitting set") {
    CHECK_THROWS_AS(triangle_free_vertices(single_paw(), {}), std::logic_error);
}

TEST_CASE("list_triangles enumerates lexicographically") {
    auto triangles = list_triangles(k4());
    REQUIRE(triangles.size() == 4);
    CHECK(triangles.front() == std::array<VertexId, 3>{0, 1, 2});
    CHECK(triangles.back() == std::array<VertexId, 3>{1, 2, 3});
    CHECK(list_triangles(c5()).empty());
}
