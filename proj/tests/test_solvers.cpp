#include "helpers.hpp"
#include "oracles.hpp"

#include <hyperlab/colouring.hpp>
#include <hyperlab/constructors.hpp>
#include <hyperlab/generators.hpp>

#include <array>

using namespace hyperlab;

namespace {

const Hypergraph single3 = new_hypergraph(3, 3, {{0, 1, 2}});

Colouring col(std::vector<int> labels) { return Colouring(labels); }

}  // namespace

TEST_CASE("Colouring is canonical") {
    auto c = col({5, 5, 2, 7, 2});
    CHECK(c.colours() == std::vector<int>{1, 1, 2, 3, 2});
    CHECK(c.k() == 3);
    CHECK(col({2, 1}) == col({1, 2}));
}

TEST_CASE("check_classical") {
    CHECK(check_classical(single3, col({1, 1, 2})));
    CHECK_FALSE(check_classical(single3, col({1, 1, 1})));
    CHECK(check_classical(new_hypergraph(3, 3, {}), col({1, 1, 1})));
    CHECK_ERROR(check_classical(single3, col({1, 2})), ErrorCode::PartialColouring);
}

TEST_CASE("check_ab") {
    CHECK(check_ab(single3, col({1, 1, 2}), 2, 2));
    CHECK_FALSE(check_ab(single3, col({1, 2, 3}), 2, 2));
    CHECK_ERROR(check_ab(single3, col({1, 2, 3}), 3, 2), ErrorCode::BadAlphaBeta);
    CHECK_ERROR(check_ab(single3, col({1, 2, 3}), 2, 4), ErrorCode::BadAlphaBeta);
    CHECK_ERROR(check_ab(single3, col({1, 2, 3}), 0, 2), ErrorCode::BadAlphaBeta);

    // (2, r) is the classical condition.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = random_hypergraph(rng, 3 + trial % 2, 7, 0.5);
        std::vector<int> labels(7);
        for (auto& l : labels) l = uniform_int(rng, 1, 3);
        CHECK(check_ab(h, col(labels), 2, h.r()) == check_classical(h, col(labels)));
    }
}

TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(single3).chi == 2);
    auto edgeless = chromatic_number(new_hypergraph(3, 4, {}));
    CHECK(edgeless.chi == 1);
    CHECK(edgeless.witness.colours() == std::vector<int>{1, 1, 1, 1});

    auto t1 = build_sigma_hypergraph(2, 4, 3, parse_partition("3,1")).graph;
    auto res1 = chromatic_number(t1);
    CHECK(res1.chi == 2);
    CHECK(check_classical(t1, res1.witness));

    auto t2 = build_sigma_hypergraph(3, 4, 5, parse_partition("3,1")).graph;
    auto res2 = chromatic_number(t2);
    CHECK(res2.chi == 3);
    CHECK(res2.witness.k() == 3);
    CHECK(check_classical(t2, res2.witness));
}

TEST_CASE("ab_colourable examples") {
    auto two = ab_colourable(single3, 2, 2, 2);
    REQUIRE(two);
    CHECK(two->colours() == std::vector<int>{1, 1, 2});

    CHECK_FALSE(ab_colourable(complete_hypergraph(3, 4), 3, 2, 2));

    auto sigma = build_sigma_hypergraph(3, 4, 3, parse_partition("2,2")).graph;
    auto per_class = ab_colourable(sigma, 3, 2, 2);
    REQUIRE(per_class);
    CHECK(check_ab(sigma, *per_class, 2, 2));
    CHECK(per_class->k() == 3);

    CHECK_FALSE(ab_colourable(single3, 4, 1, 3));
    CHECK_FALSE(ab_colourable(single3, 0, 1, 3));
}

TEST_CASE("ab_spectrum examples") {
    auto s = ab_spectrum(single3, 2, 2);
    CHECK(s.feasible == std::vector<int>{2});
    CHECK(s.gaps.empty());
    CHECK(ab_spectrum(complete_hypergraph(3, 4), 2, 2).feasible == std::vector<int>{2});
    CHECK(ab_spectrum(star_extend(single3, 0, 1), 2, 2).feasible == s.feasible);
    CHECK(ab_spectrum(new_hypergraph(3, 3, {}), 2, 2).feasible == std::vector<int>{1, 2, 3});
}

TEST_CASE("make_spectrum reports gaps") {
    std::map<int, Colouring> w{{2, col({1, 2})}, {5, col({1, 2, 3, 4, 5})}, {3, col({1, 2, 3})}};
    auto s = make_spectrum(2, 2, w);
    CHECK(s.feasible == std::vector<int>{2, 3, 5});
    CHECK(s.gaps == std::vector<int>{4});
    CHECK(s.broken());
}

TEST_CASE("clique_number examples") {
    auto k5 = clique_number(complete_hypergraph(3, 5));
    CHECK(k5.omega == 5);
    CHECK(k5.witness == VertexSet{0, 1, 2, 3, 4});

    auto sigma21 = build_sigma_hypergraph(2, 3, 2, parse_partition("2,1")).graph;
    CHECK(clique_number(sigma21).omega == 4);

    auto sparse = build_sigma_hypergraph(2, 4, 3, parse_partition("3,1")).graph;
    auto res = clique_number(sparse);
    CHECK(res.omega == 4);
    CHECK(is_clique(sparse, res.witness));

    auto none = clique_number(new_hypergraph(3, 5, {}));
    CHECK(none.omega == 2);
    CHECK(none.witness.empty());

    CHECK(clique_number(single3).omega == 3);
}

TEST_CASE("oracle_spectrum examples") {
    CHECK(oracle_spectrum(single3, 2, 2).feasible == std::vector<int>{2});
    CHECK(oracle_spectrum(new_hypergraph(3, 3, {}), 2, 2).feasible == std::vector<int>{1, 2, 3});
    CHECK_ERROR(oracle_spectrum(new_hypergraph(3, 11, {}), 2, 2), ErrorCode::SizeGuardExceeded);
}

TEST_CASE("size guards") {
    auto big = new_hypergraph(3, 65, {{0, 1, 2}});
    CHECK_ERROR(chromatic_number(big), ErrorCode::SizeGuardExceeded);
    CHECK_ERROR(ab_spectrum(big, 2, 2), ErrorCode::SizeGuardExceeded);
    CHECK_ERROR(clique_number(big), ErrorCode::SizeGuardExceeded);
    SearchLimits tight;
    tight.max_vertices = 2;
    CHECK_ERROR(chromatic_number(single3, tight), ErrorCode::SizeGuardExceeded);
}

TEST_CASE("property: search agrees with product-space brute force") {
    static constexpr std::array<int, 2> ranks{3, 4};
    for (int trial = 0; trial < 60; ++trial) {
        auto rng = trial_rng(17, static_cast<std::uint64_t>(trial));
        auto h = sample_hypergraph(rng, {ranks, 6, false});
        for (auto [a, b] : {std::pair{2, 2}, std::pair{2, h.r()}, std::pair{2, 3}, std::pair{1, 2}}) {
            auto s = ab_spectrum(h, a, b);
            CHECK(s.feasible == oracle::spectrum_by_product(h, a, b));
            for (const auto& [k, w] : s.witnesses) {
                CHECK(check_ab(h, w, a, b));
                CHECK(w.k() == k);
            }
            if (!s.feasible.empty()) {
                CHECK(s.feasible.front() == *std::min_element(s.feasible.begin(), s.feasible.end()));
            }
        }
        CHECK(chromatic_number(h).chi == oracle::chromatic_by_product(h));
    }
}

TEST_CASE("property: clique search agrees with subset enumeration") {
    static constexpr std::array<int, 3> ranks{2, 3, 4};
    for (int trial = 0; trial < 60; ++trial) {
        auto rng = trial_rng(23, static_cast<std::uint64_t>(trial));
        auto h = sample_hypergraph(rng, {ranks, 10, false});
        auto res = clique_number(h);
        CHECK(res.omega == oracle::clique_by_subsets(h));
        if (h.edge_count()) {
            CHECK(res.omega >= h.r());
            CHECK(static_cast<int>(res.witness.size()) == res.omega);
            CHECK(is_clique(h, res.witness));
        }
    }
}

TEST_CASE("property: chi monotone under subhypergraphs and added edges") {
    static constexpr std::array<int, 2> ranks{3, 4};
    for (int trial = 0; trial < 40; ++trial) {
        auto rng = trial_rng(31, static_cast<std::uint64_t>(trial));
        auto h = sample_hypergraph(rng, {ranks, 9, true});
        const int chi = chromatic_number(h).chi;

        std::vector<Vertex> keep;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (rng() % 3) keep.push_back(v);
        CHECK(chromatic_number(induced_subhypergraph(h, VertexSet(keep))).chi <= chi);

        auto denser_edges = h.edges();
        auto extra = random_hypergraph(rng, h.r(), h.vertex_count(), 0.3);
        denser_edges.insert(denser_edges.end(), extra.edges().begin(), extra.edges().end());
        CHECK(chromatic_number(new_hypergraph(h.r(), h.vertex_count(), denser_edges)).chi >= chi);
    }
}

TEST_CASE("oracle and search agree, witnesses included") {
    static constexpr std::array<int, 2> ranks{3, 4};
    for (int trial = 0; trial < 50; ++trial) {
        auto rng = trial_rng(41, static_cast<std::uint64_t>(trial));
        auto h = sample_hypergraph(rng, {ranks, 8, false});
        for (auto [a, b] : {std::pair{2, 2}, std::pair{2, h.r()}, std::pair{2, 3}}) {
            auto fast = ab_spectrum(h, a, b);
            auto slow = oracle_spectrum(h, a, b);
            CHECK(fast.feasible == slow.feasible);
            CHECK(fast.witnesses == slow.witnesses);
            CHECK(fast.gaps == slow.gaps);
        }
    }
}
