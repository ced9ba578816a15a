#include "tilesim/decoder.hpp"

#include <map>
#include <memory>
#include <set>

namespace tilesim {
namespace {

bool has_prefix(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

// Side letter after the first '.', or -1.
int side_tag(const std::string& id) {
    auto dot = id.find('.');
    if (dot == std::string::npos || dot + 1 >= id.size()) return -1;
    switch (id[dot + 1]) {
        case 'N': return North;
        case 'E': return East;
        case 'S': return South;
        case 'W': return West;
    }
    return -1;
}

struct TableDecoder {
    DecoderTable table;
    std::vector<char> body_tile;    // body or corner
    std::vector<char> corner_tile;
    std::vector<char> megatile_tile;
    std::vector<int> tags;
    std::map<std::vector<Cell>, std::uint32_t> lookup;

    // 4 = body region, otherwise the side region, -1 for corners of the block.
    int region(int x, int y) const {
        const int b0 = table.body_min();
        const int b1 = b0 + table.k;
        const bool in_x = x >= b0 && x < b1;
        const bool in_y = y >= b0 && y < b1;
        if (in_x && in_y) return 4;
        if (in_y) return x >= b1 ? East : West;
        if (in_x) return y >= b1 ? North : South;
        return -1;
    }

    std::optional<std::uint32_t> decode(const std::vector<Cell>& block) const {
        std::vector<Cell> own;
        bool body = false;
        for (const Cell& c : block) {
            if (table.kind == DecoderKind::Megatile) {
                if (!megatile_tile[c.tile]) continue;
                own.push_back(c);
                body = body || body_tile[c.tile];
                continue;
            }
            const int r = region(c.x, c.y);
            if (r == 4) {
                own.push_back(c);
                body = true;
            } else if (r >= 0 && tags[c.tile] == r) {
                own.push_back(c);
            }
        }
        if (!body) {
            if (!own.empty()) throw Error(ErrorKind::CorruptMacrotile, "block holds tile parts without a body");
            return std::nullopt;
        }
        auto it = lookup.find(own);
        if (it == lookup.end())
            throw Error(ErrorKind::CorruptMacrotile, "block cells match no simulated tile type");
        return it->second;
    }
};

}  // namespace

const char* decoder_kind_name(DecoderKind kind) {
    return kind == DecoderKind::Macrotile ? "macrotile" : "megatile";
}

DecoderKind parse_decoder_kind(const std::string& name) {
    if (name == "macrotile") return DecoderKind::Macrotile;
    if (name == "megatile") return DecoderKind::Megatile;
    throw Error(ErrorKind::SchemaError, "unknown decoder kind '" + name + "'");
}

BlockRepresentation table_representation(const TileSet& sim_tiles, const DecoderTable& table) {
    auto d = std::make_shared<TableDecoder>();
    d->table = table;
    const std::size_t n = sim_tiles.size();
    d->body_tile.assign(n, 0);
    d->corner_tile.assign(n, 0);
    d->megatile_tile.assign(n, 0);
    d->tags.assign(n, -1);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::string& id = sim_tiles.tile(i).id;
        d->corner_tile[i] = has_prefix(id, "corner");
        d->body_tile[i] = d->corner_tile[i] || has_prefix(id, "body");
        d->megatile_tile[i] = d->body_tile[i] || has_prefix(id, "anchor.") || has_prefix(id, "tooth.");
        if (!d->body_tile[i]) d->tags[i] = side_tag(id);
    }
    for (const auto& [tile, cells] : table.entries) {
        std::vector<Cell> sorted = cells;
        std::sort(sorted.begin(), sorted.end());
        if (!d->lookup.emplace(std::move(sorted), tile).second)
            throw Error(ErrorKind::InvalidArgument, "two tile types share one block encoding");
    }
    BlockRepresentation rep;
    rep.m = table.m();
    rep.decode = [d](const std::vector<Cell>& block) { return d->decode(block); };
    rep.candidate_offsets = [d](const Supertile& s) {
        const int m = d->table.m();
        const int b0 = d->table.body_min();
        std::set<std::pair<int, int>> offsets;
        for (const Cell& c : s.cells)
            if (d->corner_tile[c.tile]) offsets.insert({(((b0 - c.x) % m) + m) % m, (((b0 - c.y) % m) + m) % m});
        return std::vector<std::pair<int, int>>(offsets.begin(), offsets.end());
    };
    return rep;
}

}  // namespace tilesim
