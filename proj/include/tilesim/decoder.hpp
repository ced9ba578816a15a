// Table-driven block decoders shared by the compilers and the compiled document.
#pragma once

#include "tilesim/relations.hpp"

namespace tilesim {

enum class DecoderKind {
    Macrotile,  // body region plus arm cells tagged with the side they sit on; m = 2k
    Megatile,   // body and teeth cells; m = 2k + 4
};

const char* decoder_kind_name(DecoderKind kind);
DecoderKind parse_decoder_kind(const std::string& name);

struct DecoderTable {
    DecoderKind kind = DecoderKind::Macrotile;
    int k = 0;
    // Target tile index and the sorted block cells that identify it.
    std::vector<std::pair<std::uint32_t, std::vector<Cell>>> entries;

    int m() const { return kind == DecoderKind::Macrotile ? 2 * k : 2 * k + 4; }
    int body_min() const { return kind == DecoderKind::Macrotile ? k / 2 : k / 2 + 2; }
};

// Decodes a block by its identifying cells; CorruptMacrotile when a body is present
// but its cells are in no table entry. Candidate offsets come from body corner cells.
BlockRepresentation table_representation(const TileSet& sim_tiles, const DecoderTable& table);

}  // namespace tilesim
