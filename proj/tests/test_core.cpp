#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hfactor/core.hpp"

using namespace hfactor;

TEST_CASE("FactorShape blocks and residues") {
    FactorShape shape(2, 6);
    CHECK(shape.block_count() == 2);
    CHECK(shape.block_of(1) == 1);
    CHECK(shape.block_of(3) == 1);
    CHECK(shape.block_of(4) == 2);
    CHECK(shape.block_begin(2) == 4);
    CHECK(shape.block_end(2) == 6);
    CHECK(shape.residue(5) == 2);
    CHECK(shape.residue(6) == 0);
    CHECK(shape.h_edge(1, 2));
    CHECK_FALSE(shape.h_edge(3, 4));
    CHECK_FALSE(shape.h_edge(2, 2));
    CHECK_THROWS_AS(FactorShape(2, 7), ContractViolation);
    // h = 0: singleton blocks, no H edges
    FactorShape trivial(0, 5);
    CHECK(trivial.block_count() == 5);
    CHECK_FALSE(trivial.h_edge(1, 2));
}

TEST_CASE("LabelledGraph adjacency and degree cache") {
    LabelledGraph g(5);
    g.add_edge(1, 2);
    g.add_edge(2, 5);
    CHECK(g.adjacent(2, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 2), ContractViolation);
    CHECK_THROWS_AS(g.add_edge(3, 3), ContractViolation);
    g.remove_edge(1, 2);
    CHECK(g.degree(1) == 0);
    CHECK_THROWS_AS(g.remove_edge(1, 2), ContractViolation);
    CHECK(g.consistent());
}

TEST_CASE("Bits prefix counts and scans") {
    Bits b(70);
    b.set(1);
    b.set(64);
    b.set(69);
    CHECK(b.count() == 3);
    CHECK(b.count_prefix(63) == 1);
    CHECK(b.count_prefix(64) == 2);
    CHECK(b.first_from(2) == 64);
    CHECK(b.first_from(65) == 69);
    CHECK(b.first_from(70) == 0);
}

TEST_CASE("is_h_spanning") {
    FactorShape shape(2, 6);
    // two disjoint triangles = H itself
    CHECK(is_h_spanning(make_factor_graph(shape), shape));

    // 6-cycle misses the pair {1,3}
    LabelledGraph cyc(6);
    for (int v = 1; v <= 6; ++v) cyc.add_edge(v, v % 6 + 1);
    CHECK_FALSE(is_h_spanning(cyc, shape));

    // K_4 contains the matching on consecutive pairs
    FactorShape pairs(1, 4);
    LabelledGraph k4(4);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) k4.add_edge(u, v);
    CHECK(is_h_spanning(k4, pairs));

    LabelledGraph wrong(5);
    CHECK_THROWS_AS(is_h_spanning(wrong, pairs), ContractViolation);
}

TEST_CASE("verify_realization") {
    FactorShape pairs(1, 4);
    LabelledGraph k4(4);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) k4.add_edge(u, v);
    CHECK(verify_realization(k4, DegreeSequence{{3, 3, 3, 3}, 1}, pairs).pass());

    FactorShape shape(2, 6);
    auto h_graph = make_factor_graph(shape);
    CHECK(verify_realization(h_graph, DegreeSequence{{2, 2, 2, 2, 2, 2}, 2}, shape).pass());

    auto rep = verify_realization(h_graph, DegreeSequence{{3, 2, 2, 2, 2, 2}, 2}, shape);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.degrees_match);
    CHECK(rep.first_bad_index == 1);
    CHECK(rep.spanning);
}

TEST_CASE("degree cache survives random edge churn") {
    std::mt19937 rng(12345);
    LabelledGraph g(17);
    for (int step = 0; step < 2000; ++step) {
        int u = static_cast<int>(rng() % 17) + 1;
        int v = static_cast<int>(rng() % 17) + 1;
        if (u == v) continue;
        if (g.adjacent(u, v))
            g.remove_edge(u, v);
        else
            g.add_edge(u, v);
    }
    REQUIRE(g.consistent());
    for (int v = 1; v <= 17; ++v) CHECK(g.degree(v) == g.row(v).count());
}
