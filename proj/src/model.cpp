#include "tilesim/model.hpp"

#include "tilesim/stability.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdio>
#include <unordered_set>

namespace tilesim {

const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownTileId: return "UnknownTileId";
        case ErrorKind::EmptyAssembly: return "EmptyAssembly";
        case ErrorKind::BoundTooSmall: return "BoundTooSmall";
        case ErrorKind::NotProducible: return "NotProducible";
        case ErrorKind::NoValidAlignment: return "NoValidAlignment";
        case ErrorKind::AmbiguousAlignment: return "AmbiguousAlignment";
        case ErrorKind::BodyTooSmall: return "BodyTooSmall";
        case ErrorKind::CorruptMacrotile: return "CorruptMacrotile";
        case ErrorKind::HeightTooSmall: return "HeightTooSmall";
        case ErrorKind::FeasibilityCapExceeded: return "FeasibilityCapExceeded";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::NegativeStrength: return "NegativeStrength";
        case ErrorKind::DanglingTileId: return "DanglingTileId";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

const char* side_name(Side s) {
    static constexpr const char* names[] = {"north", "east", "south", "west"};
    return names[s];
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

TileType make_tile(std::string id, Glue north, Glue east, Glue south, Glue west) {
    return TileType{std::move(id), {std::move(north), std::move(east), std::move(south), std::move(west)}};
}

TileSet::TileSet(std::vector<TileType> tiles) : tiles_(std::move(tiles)) {
    codes_.reserve(tiles_.size());
    strengths_.reserve(tiles_.size());
    std::unordered_map<std::string, int> label_strength;
    for (std::uint32_t t = 0; t < tiles_.size(); ++t) {
        TileType& tile = tiles_[t];
        if (!by_id_.emplace(tile.id, t).second)
            throw Error(ErrorKind::SchemaError, "duplicate tile id '" + tile.id + "'");
        std::array<int, 4> code{-1, -1, -1, -1};
        std::array<int, 4> strength{0, 0, 0, 0};
        for (Side s : kSides) {
            Glue& g = tile.glues[s];
            if (g.strength < 0)
                throw Error(ErrorKind::NegativeStrength,
                            "tile '" + tile.id + "' " + side_name(s) + " glue has negative strength");
            if (g.strength == 0) {
                g.label.clear();  // strength 0 is the null glue
                continue;
            }
            auto [it, fresh] = label_strength.emplace(g.label, g.strength);
            if (!fresh && it->second != g.strength)
                throw Error(ErrorKind::SchemaError,
                            "glue label '" + g.label + "' used with strengths " +
                                std::to_string(it->second) + " and " + std::to_string(g.strength));
            auto [lit, new_label] = label_codes_.emplace(g.label, static_cast<int>(label_codes_.size()));
            if (new_label) glue_list_.push_back(g);
            code[s] = lit->second;
            strength[s] = g.strength;
        }
        codes_.push_back(code);
        strengths_.push_back(strength);
        id_hashes_.push_back(fnv1a(tile.id));
    }
}

std::optional<std::uint32_t> TileSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t TileSet::require(const std::string& id) const {
    auto found = find(id);
    if (!found) throw Error(ErrorKind::UnknownTileId, "unknown tile id '" + id + "'");
    return *found;
}

std::optional<std::size_t> TileSet::glue_index(const Glue& g) const {
    if (g.strength <= 0) return std::nullopt;
    auto it = label_codes_.find(g.label);
    if (it == label_codes_.end() || glue_list_[it->second].strength != g.strength) return std::nullopt;
    return static_cast<std::size_t>(it->second);
}

int TileSet::max_strength() const {
    int best = 0;
    for (const Glue& g : glue_list_) best = std::max(best, g.strength);
    return best;
}

static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Supertile canonicalize(Assembly cells, const TileSet& ts) {
    if (cells.empty()) throw Error(ErrorKind::EmptyAssembly, "cannot canonicalize an empty assembly");
    int min_x = INT_MAX;
    int min_y = INT_MAX;
    for (const Cell& c : cells) {
        if (c.tile >= ts.size())
            throw Error(ErrorKind::UnknownTileId, "tile index " + std::to_string(c.tile) + " out of range");
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
    }
    for (Cell& c : cells) {
        c.x -= min_x;
        c.y -= min_y;
    }
    std::sort(cells.begin(), cells.end());
    std::uint64_t h = mix64(cells.size());
    for (const Cell& c : cells) {
        std::uint64_t v = mix64(coord_key(c.x, c.y)) ^ ts.id_hash(c.tile);
        h = mix64(h ^ v);
    }
    return Supertile{std::move(cells), h};
}

std::string fingerprint_hex(std::uint64_t fp) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(fp));
    return buffer;
}

std::optional<std::uint64_t> parse_fingerprint(const std::string& text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

Supertile singleton(std::uint32_t tile, const TileSet& ts) {
    return canonicalize({Cell{0, 0, tile}}, ts);
}

Supertile translate_ids(const Supertile& s, const TileSet& from, const TileSet& to) {
    Assembly cells = s.cells;
    for (Cell& c : cells) c.tile = to.require(from.tile(c.tile).id);
    return canonicalize(std::move(cells), to);
}

std::vector<std::pair<Supertile, Count>> default_initial_state(const TileSet& ts) {
    std::vector<std::pair<Supertile, Count>> state;
    for (std::uint32_t t = 0; t < ts.size(); ++t) state.emplace_back(singleton(t, ts), Count::inf());
    return state;
}

TAS make_tas(TileSet ts, int temperature) {
    TAS tas;
    tas.initial = default_initial_state(ts);
    tas.tiles = std::move(ts);
    tas.temperature = temperature;
    return tas;
}

void validate_tas(const TAS& tas) {
    if (tas.temperature < 1) throw Error(ErrorKind::SchemaError, "temperature must be positive");
    for (std::size_t i = 0; i < tas.initial.size(); ++i) {
        const auto& [s, count] = tas.initial[i];
        if (!count.infinite && count.value == 0)
            throw Error(ErrorKind::SchemaError, "initial_state[" + std::to_string(i) + "]: count must be positive");
        std::unordered_set<std::uint64_t> seen;
        for (const Cell& c : s.cells) {
            if (c.tile >= tas.tiles.size())
                throw Error(ErrorKind::DanglingTileId, "initial_state[" + std::to_string(i) + "]: dangling tile index");
            if (!seen.insert(coord_key(c.x, c.y)).second)
                throw Error(ErrorKind::SchemaError, "initial_state[" + std::to_string(i) + "]: overlapping cells");
        }
        if (!is_tau_stable(s.cells, tas.tiles, tas.temperature))
            throw Error(ErrorKind::SchemaError,
                        "initial_state[" + std::to_string(i) + "] is not " +
                            std::to_string(tas.temperature) + "-stable");
    }
}

BindingGraph binding_graph(const Assembly& cells, const TileSet& ts) {
    BindingGraph graph;
    graph.vertices = cells.size();
    for (const Cell& c : cells)
        if (c.tile >= ts.size())
            throw Error(ErrorKind::UnknownTileId, "tile index " + std::to_string(c.tile) + " out of range");
    auto add = [&](std::size_t i, Side s, std::size_t j) {
        int w = ts.interaction(cells[i].tile, s, cells[j].tile);
        if (w > 0) graph.edges.push_back({i, j, w});
    };
    if (std::is_sorted(cells.begin(), cells.end())) {
        auto find = [&](int x, int y) -> std::size_t {
            auto it = std::lower_bound(cells.begin(), cells.end(), Cell{x, y, 0});
            return (it != cells.end() && it->x == x && it->y == y) ? static_cast<std::size_t>(it - cells.begin())
                                                                   : SIZE_MAX;
        };
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            std::size_t north = (i + 1 < cells.size() && cells[i + 1].x == c.x && cells[i + 1].y == c.y + 1)
                                    ? i + 1
                                    : SIZE_MAX;
            if (north != SIZE_MAX) add(i, North, north);
            std::size_t east = find(c.x + 1, c.y);
            if (east != SIZE_MAX) add(i, East, east);
        }
        return graph;
    }
    std::unordered_map<std::uint64_t, std::size_t> at;
    at.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) at.emplace(coord_key(cells[i].x, cells[i].y), i);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        for (Side s : {East, North}) {
            auto it = at.find(coord_key(c.x + kDx[s], c.y + kDy[s]));
            if (it != at.end()) add(i, s, it->second);
        }
    }
    return graph;
}

}  // namespace tilesim
