// The half-ladder tile set and its combinatorial experiments.
#pragma once

#include "tilesim/model.hpp"

namespace tilesim {

enum class LadderSide { Left, Right };

struct LadderSystem {
    int tau = 2;
    TileSet tiles;  // A0..A3, B0..B3

    TAS tas() const { return make_tas(tiles, tau); }
};

LadderSystem build_ladder_system(int tau);

struct HalfLadder {
    LadderSide side = LadderSide::Left;
    int height = 0;
    std::vector<int> rungs;  // sorted rung indices in [0, height)
    Supertile supertile;
};

// Column at x = 0 (left) or x = 2 (right), rung r on row 2r.
HalfLadder make_half_ladder(const LadderSystem& sys, int height, LadderSide side, const std::vector<int>& rungs);

// All tau-subsets in lexicographic order.
std::vector<HalfLadder> enumerate_half_ladders(const LadderSystem& sys, int height, LadderSide side);

HalfLadder mirror(const HalfLadder& half, const LadderSystem& sys);

// Horizontal offset of a right half-ladder whose rungs meet a left one head on.
inline constexpr int kAlignedOffset = 3;

struct AssemblyStep {
    Supertile a;
    Supertile b;
    Supertile product;
};

// Single-tile additions from singletons up to the half-ladder.
std::vector<AssemblyStep> assembly_sequence(const HalfLadder& half, const LadderSystem& sys);

// True iff every step's product lies in the combination set of its reactants.
bool verify_sequence(const std::vector<AssemblyStep>& steps, const TileSet& ts, int tau);

struct BindingMatrix {
    std::vector<HalfLadder> lefts;
    std::vector<HalfLadder> rights;
    std::vector<std::vector<int>> aligned;      // interface strength at the aligned offset
    std::vector<std::vector<int>> best;         // max over all non-overlapping offsets
    std::vector<std::vector<char>> combines;    // combine(l, r) non-empty
};

BindingMatrix binding_strength_matrix(const LadderSystem& sys, int height);

}  // namespace tilesim
