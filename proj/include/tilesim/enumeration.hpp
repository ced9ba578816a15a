// Enumeration of canonical tile sets and functional equivalence.
#pragma once

#include "tilesim/model.hpp"

namespace tilesim {

inline constexpr std::uint64_t kDefaultPowerSetCap = std::uint64_t{1} << 16;

// n-th tile set of the glue-count / strength-configuration / power-set enumeration.
// Glue labels are "0".."|G|-1"; tile ids are "t<code>" with code the base (|G|+1) side number.
TileSet get_nth_tas(std::uint64_t n, int tau, std::uint64_t power_set_cap = kDefaultPowerSetCap);

// Relabels glues to first-occurrence indices (tiles in order, sides N, E, S, W).
TileSet canonicalize_tileset(const TileSet& ts);

inline constexpr std::size_t kDefaultEquivalenceCap = 9;

// True iff some bijection of tiles preserves every directed side interaction strength.
bool functionally_equivalent(const TileSet& a, const TileSet& b, std::size_t cap = kDefaultEquivalenceCap);

}  // namespace tilesim
