#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hfactor/checker.hpp"
#include "hfactor/oracle.hpp"

using namespace hfactor;

TEST_CASE("enumerate_realizations counts") {
    // the two 4-cycles through the matching {12, 34}
    std::int64_t emitted = 0;
    FactorShape shape(1, 4);
    auto count = oracle::enumerate_realizations(
        DegreeSequence{{2, 2, 2, 2}, 1},
        [&](const LabelledGraph& g) {
            ++emitted;
            REQUIRE(verify_realization(g, DegreeSequence{{2, 2, 2, 2}, 1}, shape).pass());
            return true;
        });
    CHECK(count == 2);
    CHECK(emitted == 2);

    CHECK(oracle::enumerate_realizations(DegreeSequence{{1, 1, 1, 1}, 1},
                                         [](const LabelledGraph&) { return true; }) == 1);
    CHECK(oracle::enumerate_realizations(DegreeSequence{{2, 2, 1, 1}, 1},
                                         [](const LabelledGraph&) { return true; }) == 0);
}

TEST_CASE("decide_exists") {
    CHECK(oracle::decide_exists(DegreeSequence{{3, 3, 3, 3}, 1}));
    CHECK_FALSE(oracle::decide_exists(DegreeSequence{{2, 2, 1, 1}, 1}));
    CHECK(oracle::decide_exists(DegreeSequence{{2, 2, 2, 2, 2, 2}, 2}));  // G = H
    CHECK_THROWS_AS(oracle::decide_exists(DegreeSequence{std::vector<int>(30, 1), 1}),
                    oracle::CapExceeded);
}

TEST_CASE("pruning never loses a realization") {
    for (int h : {0, 1, 2}) {
        for (int n = h + 1; n <= 6; n += h + 1) {
            std::vector<int> d(n, n - 1);
            while (true) {
                DegreeSequence seq{d, h};
                oracle::EnumerateOptions pruned, plain;
                plain.prune = false;
                auto sink = [](const LabelledGraph&) { return true; };
                REQUIRE(oracle::enumerate_realizations(seq, sink, pruned) ==
                        oracle::enumerate_realizations(seq, sink, plain));
                int i = n - 1;
                while (i >= 0 && d[i] == h) --i;
                if (i < 0) break;
                --d[i];
                for (int j = i + 1; j < n; ++j) d[j] = d[i];
            }
        }
    }
}

TEST_CASE("residual_graph") {
    SECTION("k=n deletes nothing") {
        FactorShape shape(2, 6);
        auto g = make_factor_graph(shape);
        CHECK(oracle::residual_graph(g, shape, 6) == g);
    }
    SECTION("later blocks of H lose all their edges at a block boundary") {
        FactorShape shape(2, 6);
        auto g = make_factor_graph(shape);
        auto gp = oracle::residual_graph(g, shape, 3);  // s = 0
        for (int v = 1; v <= 3; ++v) CHECK(gp.degree(v) == 2);
        for (int v = 4; v <= 6; ++v) CHECK(gp.degree(v) == 0);
    }
    SECTION("K_4 with h=1, k=2 drops exactly the edge 3-4") {
        FactorShape shape(1, 4);
        LabelledGraph k4(4);
        for (int u = 1; u <= 4; ++u)
            for (int v = u + 1; v <= 4; ++v) k4.add_edge(u, v);
        auto gp = oracle::residual_graph(k4, shape, 2);
        CHECK_FALSE(gp.adjacent(3, 4));
        CHECK(gp.degree(3) == 2);
        CHECK(gp.degree(4) == 2);
        CHECK(gp.degree(1) == 3);
    }
    SECTION("degree drops follow the residue") {
        FactorShape shape(3, 8);
        auto g = make_factor_graph(shape);
        int k = 2;  // s = 2: block mates 3,4 lose h-s = 1... their edges beyond k
        auto gp = oracle::residual_graph(g, shape, k);
        int s = shape.residue(k);
        for (int v = k + 1; v <= shape.block_end(shape.block_of(k)); ++v)
            CHECK(gp.degree(v) == g.degree(v) - shape.h() + s);
        for (int v = shape.block_end(shape.block_of(k)) + 1; v <= 8; ++v)
            CHECK(gp.degree(v) == g.degree(v) - shape.h());
    }
}

TEST_CASE("first-k counting inequality holds in every residual graph") {
    // the necessity device: over all realizations of all accepted sequences
    // at n <= 5 and every k, the prefix degree sum of G' obeys the
    // Erdos-Gallai style counting bound
    for (int h : {1, 2}) {
        for (int n = h + 1; n <= 5; n += h + 1) {
            FactorShape shape(h, n);
            std::vector<int> d(n, n - 1);
            while (true) {
                DegreeSequence seq{d, h};
                if (checker::check_h_realizable(seq).accepted) {
                    oracle::enumerate_realizations(seq, [&](const LabelledGraph& g) {
                        for (int k = 1; k <= n; ++k) {
                            auto gp = oracle::residual_graph(g, shape, k);
                            std::int64_t lhs = 0, rhs = static_cast<std::int64_t>(k) * (k - 1);
                            for (int i = 1; i <= k; ++i) lhs += gp.degree(i);
                            for (int i = k + 1; i <= n; ++i)
                                rhs += std::min(gp.degree(i), k);
                            REQUIRE(lhs <= rhs);
                        }
                        return true;
                    });
                }
                int i = n - 1;
                while (i >= 0 && d[i] == h) --i;
                if (i < 0) break;
                --d[i];
                for (int j = i + 1; j < n; ++j) d[j] = d[i];
            }
        }
    }
}

TEST_CASE("sweep_equivalence finds no disagreement at tiny scale") {
    auto report = oracle::sweep_equivalence({1}, 4);
    CHECK(report.disagreement_count() == 0);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].n == 2);
    CHECK(report.entries[1].n == 4);
    CHECK(report.to_text().find("disagreements=0") != std::string::npos);
}

TEST_CASE("gen_sequence") {
    auto a = oracle::gen_sequence(6, 2, 7);
    auto b = oracle::gen_sequence(6, 2, 7);
    CHECK(a.degrees == b.degrees);
    CHECK(checker::check_h_realizable(a).accepted);

    auto forced = oracle::gen_sequence(4, 3, 123);
    CHECK(forced.degrees == std::vector<int>{3, 3, 3, 3});

    auto c = oracle::gen_sequence(6, 2, 8);
    CHECK(checker::check_h_realizable(c).accepted);
}
