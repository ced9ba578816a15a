// Shared oracles and small systems for the unit tests and the acceptance run.
#pragma once

#include "tilesim/model.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace tilesim;

inline Glue g(const std::string& label, int strength) { return Glue{label, strength}; }
inline Glue none() { return Glue{}; }

// Independent cut oracle: strength of the glue pair straight from the tile records.
inline int abutting_strength(const TileType& a, Side s, const TileType& b) {
    const Glue& ga = a.glue(s);
    const Glue& gb = b.glue(opposite(s));
    if (ga.strength <= 0 || gb.strength <= 0) return 0;
    if (ga.label != gb.label || ga.strength != gb.strength) return 0;
    return ga.strength;
}

// Minimum over every bipartition of the placed cells; INT_MAX for a single cell.
inline long long brute_force_min_cut(const Assembly& cells, const TileSet& ts) {
    std::size_t n = cells.size();
    if (n <= 1) return INT_MAX;
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (Side s : kSides)
                if (cells[i].x + kDx[s] == cells[j].x && cells[i].y + kDy[s] == cells[j].y)
                    w[i][j] = abutting_strength(ts.tile(cells[i].tile), s, ts.tile(cells[j].tile));
    long long best = LLONG_MAX;
    // Vertex 0 always on side A; every other subset assignment enumerated.
    for (std::uint64_t mask = 0; mask + 1 < (1ULL << (n - 1)); ++mask) {
        std::vector<int> side(n, 0);
        for (std::size_t v = 1; v < n; ++v) side[v] = ((mask >> (v - 1)) & 1) ? 0 : 1;
        long long cut = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (side[i] != side[j]) cut += w[i][j];
        best = std::min(best, cut);
    }
    return best;
}

inline bool brute_force_stable(const Assembly& cells, const TileSet& ts, int tau) {
    return cells.size() == 1 || brute_force_min_cut(cells, ts) >= tau;
}

// Random tile set over a few labels, each label with one strength.
inline TileSet random_tile_set(std::mt19937_64& rng, int tiles, int labels, int max_strength) {
    std::vector<int> strength(labels);
    for (int& s : strength) s = std::uniform_int_distribution<int>(1, max_strength)(rng);
    std::vector<TileType> out;
    for (int t = 0; t < tiles; ++t) {
        TileType tile;
        tile.id = "t" + std::to_string(t);
        for (Side s : kSides) {
            int pick = std::uniform_int_distribution<int>(-1, labels - 1)(rng);
            if (pick >= 0) tile.glues[s] = Glue{"L" + std::to_string(pick), strength[pick]};
        }
        out.push_back(tile);
    }
    return TileSet(out);
}

// Random polyomino of `size` cells with random tile types.
inline Assembly random_polyomino(std::mt19937_64& rng, int size, std::uint32_t tile_types) {
    Assembly cells{{0, 0, 0}};
    std::set<std::pair<int, int>> used{{0, 0}};
    while (static_cast<int>(cells.size()) < size) {
        const Cell& from = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        Side s = kSides[std::uniform_int_distribution<int>(0, 3)(rng)];
        std::pair<int, int> at{from.x + kDx[s], from.y + kDy[s]};
        if (used.insert(at).second) cells.push_back({at.first, at.second, 0});
    }
    for (Cell& c : cells) c.tile = std::uniform_int_distribution<std::uint32_t>(0, tile_types - 1)(rng);
    return cells;
}

// Small tau = 2 systems shared by the compiler suites.
struct NamedTas {
    std::string name;
    TAS tas;
};

inline TAS two_tile_system() {
    TileSet ts({make_tile("A", none(), g("g", 2), none(), none()),
                make_tile("B", none(), none(), none(), g("g", 2))});
    return make_tas(ts, 2);
}

// Four tiles around a square; B's north and D's south disagree.
inline TAS mismatch_square_system() {
    TileSet ts({make_tile("A", g("y", 2), g("x", 2), none(), none()),
                make_tile("B", g("w", 1), none(), none(), g("x", 2)),
                make_tile("C", none(), g("z", 2), g("y", 2), none()),
                make_tile("D", none(), none(), g("z", 2), g("z", 2))});
    return make_tas(ts, 2);
}

// Initial state holds a pre-bound PQ pair plus the singleton R.
inline TAS preassembled_system() {
    TileSet ts({make_tile("P", none(), g("s", 2), none(), none()),
                make_tile("Q", none(), g("t", 2), none(), g("s", 2)),
                make_tile("R", none(), none(), none(), g("t", 2))});
    TAS tas;
    tas.tiles = ts;
    tas.temperature = 2;
    tas.initial.emplace_back(canonicalize({{0, 0, 0}, {1, 0, 1}}, ts), Count::inf());
    tas.initial.emplace_back(singleton(2, ts), Count::inf());
    return tas;
}

// D needs cooperation of two strength-1 glues.
inline TAS cooperative_system() {
    TileSet ts({make_tile("A", g("y", 2), g("x", 2), none(), none()),
                make_tile("B", g("p", 1), none(), none(), g("x", 2)),
                make_tile("C", none(), g("q", 1), g("y", 2), none()),
                make_tile("D", none(), none(), g("p", 1), g("q", 1))});
    return make_tas(ts, 2);
}

inline std::vector<NamedTas> compiler_suite() {
    return {{"two-tile", two_tile_system()},
            {"mismatch-square", mismatch_square_system()},
            {"preassembled", preassembled_system()},
            {"cooperative", cooperative_system()}};
}

}  // namespace fixtures
