// The two-handed combination set C^tau.
#pragma once

#include "tilesim/model.hpp"

namespace tilesim {

// A side of a placed tile that carries a positive glue and has no neighbor.
struct ExposedFace {
    int x = 0;
    int y = 0;
    Side side = North;
    int code = -1;
    int strength = 0;
};

std::vector<ExposedFace> exposed_faces(const Supertile& s, const TileSet& ts);

bool occupies(const Supertile& s, int x, int y);
std::optional<std::uint32_t> tile_at(const Supertile& s, int x, int y);

struct Placement {
    int dx = 0;
    int dy = 0;
    int interface_strength = 0;
};

// Faces are sorted by (side, code, x, y).
// Offsets of b against a that are non-overlapping and carry at least `min_strength`
// across the a|b interface, sorted by (dx, dy).
std::vector<Placement> candidate_placements(const Supertile& a, const std::vector<ExposedFace>& fa,
                                            const Supertile& b, const std::vector<ExposedFace>& fb,
                                            int min_strength);

// Every tau-stable union of a with a translate of b; deduplicated, sorted by fingerprint.
std::vector<Supertile> combine(const Supertile& a, const Supertile& b, const TileSet& ts, int tau);
std::vector<Supertile> combine(const Supertile& a, const std::vector<ExposedFace>& fa, const Supertile& b,
                               const std::vector<ExposedFace>& fb, const TileSet& ts, int tau);

// Largest interface strength of b against a over all non-overlapping offsets.
int max_interface_strength(const Supertile& a, const Supertile& b, const TileSet& ts);

}  // namespace tilesim
