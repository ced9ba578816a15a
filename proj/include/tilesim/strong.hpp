// Macrotile compiler with glue-encoding arms and red strength pads.
#pragma once

#include "tilesim/decoder.hpp"

#include <memory>

namespace tilesim {

enum class StrongVariant { Strong2, Strong1 };
const char* variant_name(StrongVariant v);

struct GlueCoordinates {
    Glue glue;
    int i = 0;  // arm length slot
    int j = 0;  // position lane
    int pair_index = 0;
};

int glue_side_length(std::size_t glue_count);  // ceil(sqrt(|G|)), at least 1
GlueCoordinates glue_coordinates(const Glue& g, const std::vector<Glue>& glues);

// Geometry shared by every macrotile of one compilation.
struct StrongGeometry {
    StrongVariant variant = StrongVariant::Strong2;
    int tau = 2;
    int glue_count = 0;
    int ell = 1;          // lanes and slots per side
    int code_bits = 1;    // bits of the glue index
    int strength_width = 1;
    int pad_length = 0;   // 2 * code_bits + guard + strength columns + wall
    int k = 0;            // body side
    int m() const { return 2 * k; }
    int body_min() const { return k / 2; }
    int body_max() const { return 3 * k / 2; }  // exclusive
    int lane_row(int j) const;                  // from the body's lower edge
    int west_length(int i) const;               // stem length of a W/N arm
    int pad_start(int i) const;                 // gap coordinate of the first pad column
    int level(int glue_index, int column) const;  // 0, -1 or -2
};

// Smallest feasible even k, or BodyTooSmall when `k` is given and infeasible.
StrongGeometry strong_geometry(std::size_t glue_count, int tau, StrongVariant variant, std::optional<int> k = {});

struct ArmSpec {
    Side side = North;
    int glue_index = -1;  // -1: no arm
    GlueCoordinates coords;
    int position = 0;     // lane row along the side
    int length = 0;       // W/N: stem length; E/S: reach to the end of the pad
};

struct MacrotileLayout {
    std::uint32_t tile = 0;  // target tile index
    int k = 0;
    std::array<ArmSpec, 4> arms;
    // Cells in block coordinates [0, 2k)^2 and beyond (arms spill into neighbor blocks).
    std::vector<std::pair<int, int>> positions;
    std::vector<std::string> tile_ids;  // parallel to positions
};

MacrotileLayout layout_macrotile(std::uint32_t tile, const TileSet& ts, const StrongGeometry& geo);

struct StrongOptions {
    std::optional<int> simulator_temperature;  // default: same as the target
    std::optional<int> k;
};

struct WeakMetadata;

// Output of a compiler: simulator system, scale and representation function.
struct CompiledSimulator {
    std::string method;
    TAS simulator;
    int m = 1;
    BlockRepresentation rep;
    DecoderTable decoder;                  // serializable form of rep
    int k = 0;                             // strong compilers
    std::vector<MacrotileLayout> layouts;  // per target tile (strong compilers)
    std::size_t max_cells_per_tile = 0;    // largest simulator footprint of one represented tile
    std::map<std::string, int> parameters; // decoder metadata
    std::shared_ptr<const WeakMetadata> weak;  // weak compilers
};

CompiledSimulator compile_strong(const TAS& tas, StrongVariant variant, const StrongOptions& options = {});

// Decoder over one block; CorruptMacrotile when a body is present but inconsistent.
std::optional<std::uint32_t> geometric_decode(const std::vector<Cell>& block, const CompiledSimulator& compiled);

TAS rescale_temperature(const TAS& tas, int factor);

}  // namespace tilesim
