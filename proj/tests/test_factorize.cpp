#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hfactor/factorize.hpp"
#include "hfactor/realizer.hpp"

using namespace hfactor;

TEST_CASE("round_robin_block") {
    SECTION("h=1 is the single edge") {
        auto rounds = factorize::round_robin_block(1);
        REQUIRE(rounds.size() == 1);
        REQUIRE(rounds[0] == std::vector<VertexPair>{{0, 1}});
    }
    SECTION("h=3 partitions the six pairs of K_4") {
        auto rounds = factorize::round_robin_block(3);
        REQUIRE(rounds.size() == 3);
        std::set<VertexPair> seen;
        for (const auto& round : rounds) {
            REQUIRE(round.size() == 2);
            std::set<int> touched;
            for (auto [u, v] : round) {
                CHECK(seen.insert({u, v}).second);
                touched.insert(u);
                touched.insert(v);
            }
            CHECK(touched.size() == 4);
        }
        CHECK(seen.size() == 6);
    }
    SECTION("h=5 partitions the fifteen pairs of K_6") {
        auto rounds = factorize::round_robin_block(5);
        REQUIRE(rounds.size() == 5);
        std::set<VertexPair> seen;
        for (const auto& round : rounds) {
            REQUIRE(round.size() == 3);
            std::set<int> touched;
            for (auto [u, v] : round) {
                CHECK(seen.insert({u, v}).second);
                touched.insert(u);
                touched.insert(v);
            }
            CHECK(touched.size() == 6);
        }
        CHECK(seen.size() == 15);
    }
    SECTION("even h rejected") {
        CHECK_THROWS_AS(factorize::round_robin_block(2), factorize::UnsupportedEvenH);
        CHECK_THROWS_AS(factorize::round_robin_block(0), factorize::UnsupportedEvenH);
    }
}

namespace {

void check_matchings(const LabelledGraph& g, const FactorShape& shape) {
    auto matchings = factorize::extract_matchings(g, shape);
    REQUIRE(static_cast<int>(matchings.size()) == shape.h());
    std::set<VertexPair> all;
    for (const auto& m : matchings) {
        REQUIRE(static_cast<int>(m.size()) == shape.n() / 2);
        std::set<int> covered;
        for (auto [u, v] : m) {
            CHECK(g.adjacent(u, v));
            CHECK(all.insert({u, v}).second);  // pairwise disjoint
            covered.insert(u);
            covered.insert(v);
        }
        CHECK(static_cast<int>(covered.size()) == shape.n());  // perfect
    }
    // union is exactly E(H)
    CHECK(static_cast<int>(all.size()) == shape.n() * shape.h() / 2);
    for (auto [u, v] : all) CHECK(shape.h_edge(u, v));
}

}  // namespace

TEST_CASE("extract_matchings") {
    SECTION("h=1: the matching is E(H) itself") {
        FactorShape shape(1, 6);
        auto g = make_factor_graph(shape);
        auto matchings = factorize::extract_matchings(g, shape);
        REQUIRE(matchings.size() == 1);
        CHECK(matchings[0] == std::vector<VertexPair>{{1, 2}, {3, 4}, {5, 6}});
    }
    SECTION("h=3, n=8 on a realized graph") {
        auto report = realizer::realize(DegreeSequence{{4, 4, 4, 4, 4, 4, 4, 4}, 3});
        check_matchings(report.graph, FactorShape(3, 8));
    }
    SECTION("even h rejected, non-spanning rejected") {
        FactorShape shape(2, 6);
        CHECK_THROWS_AS(factorize::extract_matchings(make_factor_graph(shape), shape),
                        factorize::UnsupportedEvenH);
        FactorShape pairs(1, 4);
        LabelledGraph sparse(4);
        CHECK_THROWS_AS(factorize::extract_matchings(sparse, pairs), ContractViolation);
    }
}
