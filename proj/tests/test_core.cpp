#include "doctest.h"
#include "fixtures.hpp"

#include "tilesim/combine.hpp"
#include "tilesim/ladder.hpp"
#include "tilesim/stability.hpp"

using namespace tilesim;
using fixtures::g;
using fixtures::none;

TEST_CASE("binding graph edges follow glue matches only") {
    TileSet ts({make_tile("A", none(), g("a", 2), none(), none()),
                make_tile("B", none(), none(), none(), g("a", 2)),
                make_tile("C", none(), none(), none(), g("c", 2))});
    auto matched = binding_graph({{0, 0, 0}, {1, 0, 1}}, ts);
    REQUIRE(matched.edges.size() == 1);
    CHECK(matched.edges[0].weight == 2);
    CHECK(binding_graph({{0, 0, 0}, {1, 0, 2}}, ts).edges.empty());

    TileSet ell({make_tile("P", g("u", 1), g("v", 1), none(), none()),
                 make_tile("Q", none(), none(), none(), g("v", 1)),
                 make_tile("R", none(), none(), g("u", 1), none())});
    auto path = binding_graph({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}}, ell);
    CHECK(path.edges.size() == 2);
    for (const auto& e : path.edges) CHECK(e.weight == 1);

    CHECK_THROWS_AS(binding_graph({{0, 0, 7}}, ts), Error);
}

TEST_CASE("a label carrying two strengths is rejected") {
    CHECK_THROWS_AS(TileSet({make_tile("A", g("a", 1), g("a", 2), none(), none())}), Error);
    try {
        TileSet({make_tile("A", g("a", -1), none(), none(), none())});
        FAIL("expected NegativeStrength");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeStrength);
    }
}

TEST_CASE("glue set is declaration ordered and distinct") {
    TileSet ts({make_tile("A", g("n", 1), g("e", 2), none(), g("n", 1)),
                make_tile("B", none(), g("w", 2), g("e", 2), none())});
    REQUIRE(ts.glues().size() == 3);
    CHECK(ts.glues()[0].label == "n");
    CHECK(ts.glues()[1].label == "e");
    CHECK(ts.glues()[2].label == "w");
}

TEST_CASE("stability examples") {
    TileSet ts({make_tile("A", none(), g("a", 1), none(), none()),
                make_tile("B", none(), none(), none(), g("a", 1))});
    CHECK(is_tau_stable({{3, 4, 0}}, ts, 2));
    CHECK_FALSE(is_tau_stable({{0, 0, 0}, {1, 0, 1}}, ts, 2));
    CHECK(is_tau_stable({{0, 0, 0}, {1, 0, 1}}, ts, 1));
    CHECK_FALSE(is_tau_stable({{0, 0, 0}, {5, 0, 1}}, ts, 1));  // disconnected

    auto ladder = build_ladder_system(2);
    for (const auto& half : enumerate_half_ladders(ladder, 3, LadderSide::Left)) {
        CHECK(half.supertile.size() <= 9);
        CHECK(fixtures::brute_force_min_cut(half.supertile.cells, ladder.tiles) >= 2);
        CHECK(is_tau_stable(half.supertile.cells, ladder.tiles, 2));
    }
}

TEST_CASE("stability agrees with the exhaustive cut oracle") {
    std::mt19937_64 rng(20261016);
    int disagreements = 0;
    int unstable = 0;
    for (int trial = 0; trial < 100; ++trial) {
        TileSet ts = fixtures::random_tile_set(rng, 4, 3, 3);
        for (int rep = 0; rep < 20; ++rep) {
            int size = std::uniform_int_distribution<int>(1, 8)(rng);
            Assembly cells = fixtures::random_polyomino(rng, size, 4);
            int tau = std::uniform_int_distribution<int>(1, 4)(rng);
            bool expected = fixtures::brute_force_stable(cells, ts, tau);
            unstable += !expected;
            if (is_tau_stable(cells, ts, tau) != expected) ++disagreements;
            long long oracle = fixtures::brute_force_min_cut(cells, ts);
            if (cells.size() > 1 && min_cut_weight(binding_graph(cells, ts)) != oracle) ++disagreements;
        }
    }
    CHECK(disagreements == 0);
    CHECK(unstable > 0);
}

TEST_CASE("canonicalize is translation invariant and idempotent") {
    TileSet ts({make_tile("A", none(), none(), none(), none()), make_tile("B", none(), none(), none(), none())});
    auto here = canonicalize({{5, 7, 0}, {6, 7, 1}}, ts);
    auto there = canonicalize({{1, 0, 1}, {0, 0, 0}}, ts);
    CHECK(here == there);
    CHECK(canonicalize(here.cells, ts) == here);
    CHECK(canonicalize({{-4, 9, 1}}, ts).cells == std::vector<Cell>{{0, 0, 1}});
    auto horizontal = canonicalize({{0, 0, 0}, {1, 0, 0}}, ts);
    auto vertical = canonicalize({{0, 0, 0}, {0, 1, 0}}, ts);
    CHECK(horizontal.fingerprint != vertical.fingerprint);
    CHECK_THROWS_AS(canonicalize({}, ts), Error);
}

TEST_CASE("combine examples") {
    auto tas = fixtures::two_tile_system();
    const TileSet& ts = tas.tiles;
    auto result = combine(singleton(0, ts), singleton(1, ts), ts, 2);
    REQUIRE(result.size() == 1);
    CHECK(result[0] == canonicalize({{0, 0, 0}, {1, 0, 1}}, ts));
    CHECK(combine(singleton(0, ts), singleton(0, ts), ts, 2).empty());
}

TEST_CASE("combine is symmetric, size additive and stable") {
    std::mt19937_64 rng(7);
    int nonempty = 0;
    for (int trial = 0; trial < 60; ++trial) {
        TileSet ts = fixtures::random_tile_set(rng, 4, 2, 2);
        int tau = std::uniform_int_distribution<int>(1, 2)(rng);
        std::vector<Supertile> pool;
        for (int k = 0; k < 6; ++k) {
            Assembly cells = fixtures::random_polyomino(rng, std::uniform_int_distribution<int>(1, 3)(rng), 4);
            if (is_tau_stable(cells, ts, tau)) pool.push_back(canonicalize(cells, ts));
        }
        for (const auto& a : pool) {
            for (const auto& b : pool) {
                auto ab = combine(a, b, ts, tau);
                auto ba = combine(b, a, ts, tau);
                CHECK(ab == ba);
                nonempty += !ab.empty();
                for (const auto& c : ab) {
                    CHECK(c.size() == a.size() + b.size());
                    CHECK(is_tau_stable(c.cells, ts, tau));
                }
            }
        }
    }
    CHECK(nonempty > 0);
}

TEST_CASE("a mismatch between unbound neighbours adds no binding edge") {
    TileSet plain({make_tile("A", none(), g("a", 2), none(), none()),
                   make_tile("B", none(), none(), none(), g("a", 2)),
                   make_tile("C", none(), none(), none(), none())});
    TileSet mismatched({make_tile("A", none(), g("a", 2), none(), none()),
                        make_tile("B", none(), none(), none(), g("a", 2)),
                        make_tile("C", g("zz", 1), none(), none(), none())});
    Assembly cells{{0, 0, 0}, {1, 0, 1}, {1, -1, 2}};  // C under B, B has no south glue
    auto lhs = binding_graph(cells, plain);
    auto rhs = binding_graph(cells, mismatched);
    REQUIRE(lhs.edges.size() == rhs.edges.size());
    for (std::size_t i = 0; i < lhs.edges.size(); ++i) CHECK(lhs.edges[i].weight == rhs.edges[i].weight);
}
