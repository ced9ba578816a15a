#include "doctest.h"
#include "fixtures.hpp"

#include "tilesim/combine.hpp"
#include "tilesim/stability.hpp"
#include "tilesim/verify.hpp"

#include <set>

using namespace tilesim;
using fixtures::g;
using fixtures::none;

namespace {

Supertile macrotile(const CompiledSimulator& compiled, std::uint32_t tile) {
    const MacrotileLayout& layout = compiled.layouts[tile];
    Assembly cells;
    for (std::size_t i = 0; i < layout.positions.size(); ++i)
        cells.push_back({layout.positions[i].first, layout.positions[i].second,
                         compiled.simulator.tiles.require(layout.tile_ids[i])});
    return canonicalize(cells, compiled.simulator.tiles);
}

std::pair<int, int> min_corner(const MacrotileLayout& layout) {
    int mx = layout.positions[0].first, my = layout.positions[0].second;
    for (auto [x, y] : layout.positions) {
        mx = std::min(mx, x);
        my = std::min(my, y);
    }
    return {mx, my};
}

}  // namespace

TEST_CASE("glue coordinates follow row-major order on the side-length grid") {
    std::vector<Glue> glues{g("a", 1), g("b", 1), g("c", 2), g("d", 2), g("e", 1)};
    CHECK(glue_side_length(0) == 1);
    CHECK(glue_side_length(1) == 1);
    CHECK(glue_side_length(4) == 2);
    CHECK(glue_side_length(5) == 3);
    auto c = glue_coordinates(g("e", 1), glues);
    CHECK(c.i == 1);
    CHECK(c.j == 1);
    CHECK(c.pair_index == 4);
    auto first = glue_coordinates(g("a", 1), glues);
    CHECK(first.i == 0);
    CHECK(first.j == 0);
    CHECK_THROWS_AS(glue_coordinates(g("zz", 1), glues), Error);

    // Distinct glues get distinct (slot, lane) pairs.
    std::vector<Glue> many;
    for (int i = 0; i < 17; ++i) many.push_back(g("l" + std::to_string(i), 1 + i % 2));
    std::set<std::pair<int, int>> seen;
    for (const Glue& glue : many) {
        auto gc = glue_coordinates(glue, many);
        CHECK(seen.insert({gc.i, gc.j}).second);
        CHECK(gc.i < glue_side_length(many.size()));
    }
}

TEST_CASE("geometry search respects slot and lane spacing") {
    for (std::size_t glues : {1u, 2u, 4u, 5u, 9u, 17u}) {
        for (auto variant : {StrongVariant::Strong2, StrongVariant::Strong1}) {
            auto geo = strong_geometry(glues, 3, variant);
            CHECK(geo.k % 2 == 0);
            for (int i = 0; i + 1 < geo.ell; ++i)
                CHECK(geo.west_length(i + 1) - geo.west_length(i) >= geo.pad_length);
            for (int j = 0; j + 1 < geo.ell; ++j) CHECK(geo.lane_row(j + 1) - geo.lane_row(j) >= 6);
            CHECK(geo.lane_row(geo.ell - 1) + 4 <= geo.k - 2);
        }
    }
    try {
        strong_geometry(5, 2, StrongVariant::Strong2, 6);
        FAIL("expected BodyTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BodyTooSmall);
    }
}

TEST_CASE("manchester levels put one notch in every bit pair") {
    auto geo = strong_geometry(9, 2, StrongVariant::Strong2);
    for (int p = 0; p < 9; ++p) {
        for (int b = 0; b < geo.code_bits; ++b) {
            int first = geo.level(p, 2 * b);
            int second = geo.level(p, 2 * b + 1);
            CHECK(first + second == -1);
            int bit = (p >> (geo.code_bits - 1 - b)) & 1;
            CHECK((first == 0) == (bit == 1));
        }
        CHECK(geo.level(p, 2 * geo.code_bits) == 0);
        CHECK(geo.level(p, geo.pad_length - 1) == 0);
    }
}

TEST_CASE("macrotiles expose no internal-strength glue and bind only on the grid") {
    for (auto variant : {StrongVariant::Strong2, StrongVariant::Strong1}) {
        for (const auto& named : fixtures::compiler_suite()) {
            CAPTURE(named.name);
            const TAS& target = named.tas;
            auto compiled = compile_strong(target, variant);
            const TileSet& u = compiled.simulator.tiles;
            const int m = compiled.m;
            std::vector<Supertile> tiles;
            for (std::uint32_t t = 0; t < target.tiles.size(); ++t) {
                tiles.push_back(macrotile(compiled, t));
                CHECK(is_tau_stable(tiles.back().cells, u, target.temperature));
                for (const ExposedFace& f : exposed_faces(tiles.back(), u)) {
                    if (variant == StrongVariant::Strong2) CHECK(f.strength < target.temperature);
                    CHECK(u.glues()[f.code].label.rfind("red", 0) == 0);
                }
            }
            for (std::uint32_t a = 0; a < tiles.size(); ++a) {
                for (std::uint32_t b = 0; b < tiles.size(); ++b) {
                    auto fa = exposed_faces(tiles[a], u);
                    auto fb = exposed_faces(tiles[b], u);
                    auto [ax, ay] = min_corner(compiled.layouts[a]);
                    auto [bx, by] = min_corner(compiled.layouts[b]);
                    for (const Placement& p : candidate_placements(tiles[a], fa, tiles[b], fb, 1)) {
                        // Block offset of b relative to a.
                        int ox = p.dx + ax - bx;
                        int oy = p.dy + ay - by;
                        CAPTURE(ox);
                        CAPTURE(oy);
                        REQUIRE(ox % m == 0);
                        REQUIRE(oy % m == 0);
                        int expected = 0;
                        for (Side s : kSides)
                            if (ox == kDx[s] * m && oy == kDy[s] * m)
                                expected = target.tiles.interaction(a, s, b);
                        CHECK(p.interface_strength == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("decoder round trip and corruption") {
    auto target = fixtures::cooperative_system();
    auto compiled = compile_strong(target, StrongVariant::Strong2);
    const int m = compiled.m;
    for (std::uint32_t t = 0; t < target.tiles.size(); ++t) {
        Supertile s = macrotile(compiled, t);
        auto result = decode_supertile(s, compiled.rep, target.tiles);
        REQUIRE(result.status == DecodeStatus::Ok);
        REQUIRE(result.target.size() == 1);
        CHECK(result.target.cells[0].tile == t);
        CHECK(result.image.clean);
    }
    // Body with a missing interior cell.
    const MacrotileLayout& layout = compiled.layouts[0];
    std::vector<Cell> block;
    for (std::size_t i = 0; i < layout.positions.size(); ++i) {
        auto [x, y] = layout.positions[i];
        if (x < 0 || y < 0 || x >= m || y >= m) continue;
        if (x == compiled.k && y == compiled.k) continue;
        block.push_back({x, y, compiled.simulator.tiles.require(layout.tile_ids[i])});
    }
    std::sort(block.begin(), block.end());
    try {
        geometric_decode(block, compiled);
        FAIL("expected CorruptMacrotile");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CorruptMacrotile);
    }
    CHECK_FALSE(geometric_decode({}, compiled).has_value());
}

TEST_CASE("compiled suite satisfies all four relations") {
    for (auto variant : {StrongVariant::Strong2, StrongVariant::Strong1}) {
        for (const auto& named : fixtures::compiler_suite()) {
            CAPTURE(named.name);
            std::string variant_label = variant_name(variant);
            CAPTURE(variant_label);
            auto compiled = compile_strong(named.tas, variant);
            VerifyOptions options;
            options.target_bound = 4;
            auto result = verify_simulation(named.tas, compiled, options);
            for (const RelationReport* r : {&result.productions, &result.follows, &result.weakly, &result.strongly}) {
                CAPTURE(r->relation);
                std::string first = r->violations.empty() ? "" : r->violations.front().kind + ": " + r->violations.front().detail;
                CAPTURE(first);
                CHECK(r->pass);
            }
            CHECK(result.sim_producibles == result.target_producibles);
            CHECK(result.productions.images == result.target_producibles);
        }
    }
}

TEST_CASE("temperature rescaling multiplies strengths") {
    auto target = fixtures::cooperative_system();
    auto scaled = rescale_temperature(target, 3);
    CHECK(scaled.temperature == 6);
    CHECK(scaled.tiles.max_strength() == 6);
    auto a = explore(target, 4);
    auto b = explore(scaled, 4);
    CHECK(a.supertiles.size() == b.supertiles.size());
    CHECK_THROWS_AS(rescale_temperature(target, 0), Error);
}
