#include "helpers.hpp"

#include <hyperlab/colouring.hpp>
#include <hyperlab/constructors.hpp>
#include <hyperlab/verify.hpp>

#include <fstream>
#include <sstream>

using namespace hyperlab;

TEST_CASE("verify_lemma_rectangular") {
    auto six = verify_lemma_rectangular(6);
    CHECK(six.pass());
    CHECK(six.instances == 29);
    auto one = verify_lemma_rectangular(1);
    CHECK(one.pass());
    CHECK(one.instances == 1);
    CHECK(verify_lemma_rectangular(12).pass());
    CHECK_ERROR(verify_lemma_rectangular(13), ErrorCode::ROutOfRange);
}

TEST_CASE("verify_clique_theorem on single configurations") {
    // r=3, (2,1), n=2, q=2: a 4-clique and no 5-clique.
    auto h = build_sigma_hypergraph(2, 3, 2, parse_partition("2,1")).graph;
    CHECK(clique_number(h).omega == 4);
    // r=3, (1,1,1), n=5, q=1: the 5 classes give a 5-clique.
    CHECK(clique_number(build_sigma_hypergraph(5, 3, 1, parse_partition("1,1,1")).graph).omega == 5);
    // r=4, (2,2), n=3, q=3: no 5-clique.
    CHECK(clique_number(build_sigma_hypergraph(3, 4, 3, parse_partition("2,2")).graph).omega == 4);

    auto small = verify_clique_theorem({3}, 4, 3);
    CHECK(small.pass());
    CHECK(small.instances > 0);
}

TEST_CASE("verify_sparse_construction") {
    auto t1 = verify_sparse_construction(1, 4);
    CHECK(t1.pass());
    auto h = build_sigma_hypergraph(2, 4, 3, parse_partition("3,1")).graph;
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 6);

    CHECK(verify_sparse_construction(1, 5).pass());
    auto h5 = build_sigma_hypergraph(2, 5, 4, parse_partition("4,1")).graph;
    CHECK(h5.vertex_count() == 8);
    CHECK(h5.edge_count() == 8);
    CHECK(chromatic_number(h5).chi == 2);

    CHECK_ERROR(verify_sparse_construction(3, 4), ErrorCode::SizeGuardExceeded);
}

TEST_CASE("verify_extension_preservation") {
    auto none = verify_extension_preservation(0, 1, PreservationMode::Both);
    CHECK(none.pass());
    CHECK(none.instances == 0);

    auto some = verify_extension_preservation(15, 7, PreservationMode::Both);
    CHECK(some.pass());
    CHECK(some.instances == 15);

    // Star of a single edge: spectrum {2} on both sides.
    auto single = new_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(ab_spectrum(star_extend(single, 0, 1), 2, 2).feasible == ab_spectrum(single, 2, 2).feasible);
}

TEST_CASE("verify_clique_stability") {
    auto h = build_sigma_hypergraph(2, 4, 3, parse_partition("3,1")).graph;
    auto current = h;
    for (int step = 0; step < 3; ++step) {
        current = star_extend(current, 0, 1);
        CHECK(clique_number(current).omega == 5);
        CHECK(chromatic_number(current).chi == 2);
    }
    auto single = new_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(clique_number(star_extend(single, 0, 1)).omega == 4);

    auto zero_steps = verify_clique_stability(5, 3, 0);
    CHECK(zero_steps.pass());
    CHECK(verify_clique_stability(10, 3, 2).pass());
}

TEST_CASE("seeded runs are reproducible") {
    auto a = to_json(verify_extension_preservation(8, 99, PreservationMode::Both), false);
    auto b = to_json(verify_extension_preservation(8, 99, PreservationMode::Both), false);
    CHECK(a == b);
    CHECK(to_json(verify_oracle_equivalence(5, 3), false) == to_json(verify_oracle_equivalence(5, 3), false));
}

TEST_CASE("report schemas match golden files") {
    auto read = [](const std::string& name) {
        std::ifstream in(std::string(HYPERLAB_GOLDEN_DIR) + "/" + name);
        REQUIRE(in);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto report = verify_lemma_rectangular(3);
    CHECK(to_json(report, false).dump(2) + "\n" == read("lemma_r3.json"));

    VerificationReport failing{"demo", 2, {{{{"seed", 1}, {"trial", 0}}, "omega=3", "omega=4"}}, 0.25};
    CHECK_FALSE(failing.pass());
    CHECK(to_json(failing, false).dump(2) + "\n" == read("failing.json"));
    CHECK(csv_header() + "\n" + to_csv_row(failing) + "\n" == read("failing.csv"));
}
