#include "helpers.hpp"
#include "oracles.hpp"

#include <hyperlab/combinations.hpp>
#include <hyperlab/generators.hpp>
#include <hyperlab/hypergraph.hpp>

using namespace hyperlab;

TEST_CASE("new_hypergraph builds canonical edge sets") {
    auto h = new_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(h.edge_count() == 1);

    auto dedup = new_hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}});
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.edges().front() == Edge{0, 1, 2});

    auto ordered = new_hypergraph(3, 5, {{4, 3, 2}, {0, 2, 1}, {1, 3, 0}});
    CHECK(ordered.edges() == std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    CHECK(ordered.edge_masks().size() == 3);
    CHECK(ordered.edge_masks()[2] == VertexMask("11100"));
}

TEST_CASE("new_hypergraph rejects invalid edges") {
    CHECK_ERROR(new_hypergraph(3, 3, {{0, 1, 3}}), ErrorCode::VertexOutOfRange);
    CHECK_ERROR(new_hypergraph(3, 3, {{0, 1}}), ErrorCode::NonUniformEdge);
    CHECK_ERROR(new_hypergraph(3, 3, {{0, 1, 1}}), ErrorCode::DuplicateVertexInEdge);
    CHECK_ERROR(new_hypergraph(3, 3, {{-1, 0, 1}}), ErrorCode::VertexOutOfRange);
    CHECK_ERROR(new_hypergraph(1, 3, {}), ErrorCode::ROutOfRange);
}

TEST_CASE("isolated vertices are allowed") {
    auto h = new_hypergraph(3, 10, {{0, 1, 2}});
    CHECK(h.vertex_count() == 10);
    CHECK(h.incidence()[9].empty());
}

TEST_CASE("is_edge") {
    auto h = new_hypergraph(3, 4, {{0, 1, 2}});
    CHECK(is_edge(h, {0, 1, 2}));
    CHECK(is_edge(h, {2, 0, 1}));
    CHECK_FALSE(is_edge(h, {0, 1}));
    CHECK_FALSE(is_edge(h, {0, 1, 3}));
    CHECK_FALSE(is_edge(h, {0, 1, 7}));
}

TEST_CASE("is_clique") {
    CHECK(is_clique(complete_hypergraph(3, 4), {0, 1, 2, 3}));
    CHECK_FALSE(is_clique(new_hypergraph(3, 4, {{0, 1, 2}}), {0, 1, 2, 3}));
    // Fewer than r vertices: vacuous.
    CHECK(is_clique(new_hypergraph(3, 4, {}), {0, 1}));
    // H(2,3,2 | (2,1)): classes {0,1}, {2,3}; every 3-subset splits 2+1.
    auto sigma = new_hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(is_clique(sigma, {0, 1, 2, 3}));
}

TEST_CASE("induced_subhypergraph") {
    auto h = new_hypergraph(3, 4, {{0, 1, 2}});
    auto sub = induced_subhypergraph(h, {0, 1, 2});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edges() == std::vector<Edge>{{0, 1, 2}});

    auto none = induced_subhypergraph(h, {0, 1, 3});
    CHECK(none.vertex_count() == 3);
    CHECK(none.edge_count() == 0);

    auto k5 = complete_hypergraph(3, 5);
    auto sub4 = induced_subhypergraph(k5, {0, 2, 3, 4});
    CHECK(sub4.edges() == complete_hypergraph(3, 4).edges());
    CHECK_ERROR(induced_subhypergraph(h, {0, 9}), ErrorCode::VertexOutOfRange);
}

TEST_CASE("property: is_clique agrees with direct enumeration, induced keeps r") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = uniform_int(rng, 2, 4);
        const int n = uniform_int(rng, r, 9);
        auto h = random_hypergraph(rng, r, n, 0.3 + 0.6 * unit_real(rng));
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1) members.push_back(v);
        VertexSet s(members);

        bool expected = true;
        for (const auto& pick : oracle::all_subsets(static_cast<int>(members.size()), r)) {
            Edge k;
            for (Vertex i : pick) k.push_back(members[static_cast<std::size_t>(i)]);
            expected = expected && is_edge(h, VertexSet(k));
        }
        CHECK(is_clique(h, s) == expected);

        auto sub = induced_subhypergraph(h, s);
        CHECK(sub.r() == h.r());
        CHECK(sub.edge_count() <= h.edge_count());
    }
}

TEST_CASE("for_each_combination and binomial") {
    std::vector<int> pool{1, 2, 3, 4, 5};
    int count = 0;
    for_each_combination<int>(pool, 3, [&](std::span<const int>) { return ++count, true; });
    CHECK(count == 10);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(200, 100) == UINT64_MAX);
}
