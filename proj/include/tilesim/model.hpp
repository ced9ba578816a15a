// Core 2HAM types: glues, tile types, tile sets, assemblies, supertiles, systems.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tilesim {

enum class ErrorKind {
    UnknownTileId,
    EmptyAssembly,
    BoundTooSmall,
    NotProducible,
    NoValidAlignment,
    AmbiguousAlignment,
    BodyTooSmall,
    CorruptMacrotile,
    HeightTooSmall,
    FeasibilityCapExceeded,
    CapExceeded,
    SchemaError,
    NegativeStrength,
    DanglingTileId,
    InvalidArgument,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Glue {
    std::string label;
    int strength = 0;

    bool is_null() const { return strength == 0; }
    static Glue null() { return {}; }
    auto operator<=>(const Glue&) const = default;
};

inline bool glues_interact(const Glue& a, const Glue& b) {
    return a.strength > 0 && a.strength == b.strength && a.label == b.label;
}

enum Side : int { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Side, 4> kSides{North, East, South, West};
inline constexpr std::array<int, 4> kDx{0, 1, 0, -1};
inline constexpr std::array<int, 4> kDy{1, 0, -1, 0};

inline Side opposite(Side s) { return static_cast<Side>((s + 2) % 4); }
const char* side_name(Side s);

struct TileType {
    std::string id;
    std::array<Glue, 4> glues;  // indexed by Side

    const Glue& glue(Side s) const { return glues[s]; }
    bool operator==(const TileType&) const = default;
};

TileType make_tile(std::string id, Glue north, Glue east, Glue south, Glue west);

// Tile set with interned labels. A label must carry a single positive strength.
class TileSet {
public:
    TileSet() = default;
    explicit TileSet(std::vector<TileType> tiles);

    const std::vector<TileType>& tiles() const { return tiles_; }
    std::size_t size() const { return tiles_.size(); }
    const TileType& tile(std::uint32_t index) const { return tiles_[index]; }

    std::optional<std::uint32_t> find(const std::string& id) const;
    std::uint32_t require(const std::string& id) const;  // throws UnknownTileId

    // -1 when the side carries no positive glue.
    int code(std::uint32_t tile, Side s) const { return codes_[tile][s]; }
    int strength(std::uint32_t tile, Side s) const { return strengths_[tile][s]; }

    // Strength between tile a's side s and tile b placed on that side.
    int interaction(std::uint32_t a, Side s, std::uint32_t b) const {
        int ca = codes_[a][s];
        return (ca >= 0 && ca == codes_[b][opposite(s)]) ? strengths_[a][s] : 0;
    }

    // Distinct positive glues in declaration order (tiles, then N, E, S, W).
    const std::vector<Glue>& glues() const { return glue_list_; }
    std::optional<std::size_t> glue_index(const Glue& g) const;
    int max_strength() const;

    std::uint64_t id_hash(std::uint32_t tile) const { return id_hashes_[tile]; }

    bool operator==(const TileSet& other) const { return tiles_ == other.tiles_; }

private:
    std::vector<TileType> tiles_;
    std::unordered_map<std::string, std::uint32_t> by_id_;
    std::vector<std::array<int, 4>> codes_;
    std::vector<std::array<int, 4>> strengths_;
    std::vector<Glue> glue_list_;
    std::unordered_map<std::string, int> label_codes_;
    std::vector<std::uint64_t> id_hashes_;
};

struct Cell {
    int x = 0;
    int y = 0;
    std::uint32_t tile = 0;

    auto operator<=>(const Cell&) const = default;
};

using Assembly = std::vector<Cell>;

// Translation class of an assembly: cells shifted to min x = min y = 0, sorted.
struct Supertile {
    std::vector<Cell> cells;
    std::uint64_t fingerprint = 0;

    std::size_t size() const { return cells.size(); }
    bool operator==(const Supertile& other) const {
        return fingerprint == other.fingerprint && cells == other.cells;
    }
};

Supertile canonicalize(Assembly cells, const TileSet& ts);
std::string fingerprint_hex(std::uint64_t fp);
std::optional<std::uint64_t> parse_fingerprint(const std::string& text);
Supertile singleton(std::uint32_t tile, const TileSet& ts);
Supertile translate_ids(const Supertile& s, const TileSet& from, const TileSet& to);

struct Count {
    std::uint64_t value = 0;
    bool infinite = false;

    static Count inf() { return {0, true}; }
    static Count finite(std::uint64_t n) { return {n, false}; }
    bool operator==(const Count&) const = default;
};

struct TAS {
    TileSet tiles;
    std::vector<std::pair<Supertile, Count>> initial;
    int temperature = 2;
};

std::vector<std::pair<Supertile, Count>> default_initial_state(const TileSet& ts);
TAS make_tas(TileSet ts, int temperature);  // default initial state
void validate_tas(const TAS& tas);          // stability and id checks

struct WeightedEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    int weight = 0;
};

struct BindingGraph {
    std::size_t vertices = 0;
    std::vector<WeightedEdge> edges;
};

BindingGraph binding_graph(const Assembly& cells, const TileSet& ts);

// Packs a lattice coordinate into a hashable key.
inline std::uint64_t coord_key(int x, int y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint32_t>(y);
}

std::uint64_t fnv1a(const std::string& text);

}  // namespace tilesim
