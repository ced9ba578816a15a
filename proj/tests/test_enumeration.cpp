#include "doctest.h"
#include "fixtures.hpp"

#include "tilesim/enumeration.hpp"

#include <set>

using namespace tilesim;
using fixtures::g;
using fixtures::none;

namespace {

using GlueTuple = std::array<std::pair<std::string, int>, 4>;

std::set<GlueTuple> tuples(const TileSet& ts) {
    std::set<GlueTuple> out;
    for (const TileType& t : ts.tiles()) {
        GlueTuple tuple;
        for (Side s : kSides) tuple[s] = {t.glues[s].label, t.glues[s].strength};
        out.insert(tuple);
    }
    return out;
}

// Hand trace for one glue at strength 1: the 15 tiles in counter order are the
// side patterns 0001 .. 1111 read as (N, E, S, W); subset n takes tile j when bit j-1 of n is set.
std::set<GlueTuple> single_glue_trace(std::uint64_t n, int strength) {
    std::set<GlueTuple> out;
    for (int j = 1; j <= 15; ++j) {
        if (!((n >> (j - 1)) & 1)) continue;
        GlueTuple tuple;
        int bits[4] = {(j >> 3) & 1, (j >> 2) & 1, (j >> 1) & 1, j & 1};  // N, E, S, W
        for (int s = 0; s < 4; ++s)
            tuple[s] = bits[s] ? std::pair<std::string, int>{"0", strength} : std::pair<std::string, int>{"", 0};
        out.insert(tuple);
    }
    return out;
}

}  // namespace

TEST_CASE("enumeration prefix matches the hand trace") {
    CHECK(get_nth_tas(0, 2).size() == 0);
    auto first = get_nth_tas(1, 2);
    REQUIRE(first.size() == 1);
    CHECK(first.tile(0).id == "t1");
    CHECK(first.tile(0).glue(West) == g("0", 1));
    CHECK(first.tile(0).glue(North).is_null());
    for (std::uint64_t n = 0; n < 50; ++n) {
        CAPTURE(n);
        CHECK(tuples(get_nth_tas(n, 2)) == single_glue_trace(n, 1));
    }
    // Second strength configuration starts after the first power set.
    CHECK(get_nth_tas(32768, 2).size() == 0);
    CHECK(tuples(get_nth_tas(32769, 2)) == single_glue_trace(1, 2));
}

TEST_CASE("enumeration outputs are canonical and bounded by tau") {
    for (std::uint64_t n = 0; n < 200; ++n) {
        TileSet ts = get_nth_tas(n * 97, 2);
        for (const Glue& glue : ts.glues()) {
            CHECK(glue.strength >= 1);
            CHECK(glue.strength <= 2);
            CHECK(glue.label == "0");
        }
        CHECK(ts == get_nth_tas(n * 97, 2));
    }
    try {
        get_nth_tas(65536, 2);
        FAIL("expected FeasibilityCapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FeasibilityCapExceeded);
    }
    CHECK_THROWS_AS(get_nth_tas(0, 0), Error);
}

TEST_CASE("enumeration prefix covers every one-glue canonical set at tau 2") {
    // Oracle: every non-empty set of tiles over {blank, glue "0"} sides, for each strength.
    std::vector<GlueTuple> patterns;
    for (int mask = 1; mask < 16; ++mask) {
        GlueTuple tuple;
        for (Side s : kSides) tuple[s] = {"", 0};
        patterns.push_back(tuple);
        for (Side s : kSides)
            if (mask & (1 << s)) patterns.back()[s] = {"0", 1};
    }
    std::set<std::set<GlueTuple>> expected;
    for (int strength : {1, 2}) {
        for (int subset = 1; subset < (1 << 15); ++subset) {
            std::set<GlueTuple> set;
            for (int i = 0; i < 15; ++i) {
                if (!(subset & (1 << i))) continue;
                GlueTuple t = patterns[i];
                for (auto& side : t)
                    if (side.second) side.second = strength;
                set.insert(t);
            }
            expected.insert(set);
        }
    }
    std::set<std::set<GlueTuple>> seen;
    for (std::uint64_t n = 0; n < 65536; ++n) {
        auto t = tuples(get_nth_tas(n, 2));
        if (!t.empty()) seen.insert(t);
    }
    CHECK(expected.size() == 2 * 32767);
    CHECK(seen == expected);
}

TEST_CASE("canonical relabeling") {
    TileSet xy({make_tile("A", g("x", 1), g("y", 2), none(), none()), make_tile("B", none(), none(), g("x", 1), g("y", 2))});
    TileSet canon = canonicalize_tileset(xy);
    CHECK(canon.tile(0).glue(North) == g("0", 1));
    CHECK(canon.tile(0).glue(East) == g("1", 2));
    CHECK(canon.tile(1).glue(West) == g("1", 2));
    CHECK(canonicalize_tileset(canon) == canon);
    CHECK(functionally_equivalent(xy, canon));
}

TEST_CASE("functional equivalence") {
    TileSet one({make_tile("A", g("a", 1), none(), g("a", 1), none())});
    TileSet two({make_tile("A", g("a", 2), none(), g("a", 2), none())});
    CHECK(functionally_equivalent(one, one));
    CHECK_FALSE(functionally_equivalent(one, two));
    TileSet ab({make_tile("A", none(), g("p", 2), none(), none()), make_tile("B", none(), none(), none(), g("p", 2))});
    TileSet ba({make_tile("Y", none(), none(), none(), g("q", 2)), make_tile("X", none(), g("q", 2), none(), none())});
    CHECK(functionally_equivalent(ab, ba));
    CHECK_FALSE(functionally_equivalent(ab, one));

    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        TileSet ts = fixtures::random_tile_set(rng, 5, 3, 2);
        TileSet canon = canonicalize_tileset(ts);
        CHECK(functionally_equivalent(ts, canon));
        CHECK(functionally_equivalent(canon, ts));
        // Symmetry against an unrelated set.
        TileSet other = fixtures::random_tile_set(rng, 5, 3, 2);
        CHECK(functionally_equivalent(ts, other) == functionally_equivalent(other, ts));
    }
    std::vector<TileType> many(12, make_tile("A", none(), none(), none(), none()));
    for (int i = 0; i < 12; ++i) many[i].id = "T" + std::to_string(i);
    CHECK_THROWS_AS(functionally_equivalent(TileSet(many), TileSet(many)), Error);
}
