// Megatile compiler with detachable glue gadgets and strength completions.
#pragma once

#include "tilesim/strong.hpp"

namespace tilesim {

enum class WeakVariant { Weak1, Weak2, Weak3 };
const char* variant_name(WeakVariant v);

// Megatile body k x k, teeth one cell deep, gadget backbone, then a gap of width k
// in which arms of facing gadgets interlock. Block side m = 2k + 4.
struct WeakGeometry {
    WeakVariant variant = WeakVariant::Weak1;
    int tau = 2;
    int teeth_bits = 1;  // bits of the tile index
    StrongGeometry arms; // arm layout inside the gap; arms.k is the body side
    int k() const { return arms.k; }
    int m() const { return 2 * arms.k + 4; }
    int body_min() const { return arms.k / 2 + 2; }
    int body_max() const { return body_min() + arms.k; }
};

WeakGeometry weak_geometry(std::size_t tile_count, std::size_t glue_count, int tau, WeakVariant variant);

// Assemblies in block coordinates; tile indices refer to the simulator tile set.
struct WeakMetadata {
    WeakGeometry geo;
    std::vector<Assembly> megatiles;                        // per target tile
    std::vector<std::array<Assembly, 4>> gadgets;           // per target tile and side; empty for null glues
    std::vector<std::array<Assembly, 4>> completions;       // matching the gadgets
};

CompiledSimulator compile_weak(const TAS& tas, WeakVariant variant);

struct AttachmentSite {
    int block_x = 0;
    int block_y = 0;
    std::uint32_t tile = 0;  // target tile of the megatile
    Side side = North;
    Supertile gadget;        // canonical gadget supertile that fits
};

// Exposed megatile faces whose gadget can be placed without overlap.
std::vector<AttachmentSite> gadget_attachment_sites(const Supertile& s, const CompiledSimulator& compiled,
                                                    const TileSet& target_tiles);

}  // namespace tilesim
