#include "tilesim/strong.hpp"

#include <algorithm>
#include <map>

namespace tilesim {
namespace {

struct PlacedCell {
    int x = 0;
    int y = 0;
    std::string role;
    int arm = -1;  // side of the arm; -1 for body cells
    std::optional<std::pair<Side, Glue>> red;
};

int code_bits_for(std::size_t glue_count) {
    int bits = 1;
    while ((std::size_t{1} << bits) < glue_count) ++bits;
    return bits;
}

std::pair<int, int> rotate_cw(int x, int y, int m) { return {y, m - 1 - x}; }
Side rotate_cw(Side s) { return static_cast<Side>((s + 1) % 4); }

// East arm (or west arm) of the E/W pair, in block coordinates.
std::vector<PlacedCell> horizontal_arm(const StrongGeometry& geo, bool east, int glue_index, const Glue& glue) {
    std::vector<PlacedCell> cells;
    const int ell = geo.ell;
    const int i = glue_index / ell;
    const int j = glue_index % ell;
    const int b0 = geo.body_min();
    const int b1 = geo.body_max();
    const int row = b0 + geo.lane_row(j);
    const int start = geo.pad_start(i);
    const int L = geo.pad_length;
    const int red_from = 2 * geo.code_bits + 1 + geo.strength_width - glue.strength;
    const int red_to = 2 * geo.code_bits + 1 + geo.strength_width;
    const char* tag = east ? "E" : "W";
    const Side arm_side = east ? East : West;
    auto gap_x = [&](int u) { return east ? b1 + u : b0 - geo.k + u; };
    auto red_glue = [&]() {
        if (geo.variant == StrongVariant::Strong2) return Glue{"red", 1};
        return Glue{"red" + std::to_string(glue.strength), glue.strength};
    };
    if (east) {
        for (int u = 0; u < start; ++u) cells.push_back({gap_x(u), row, std::string("arm.") + tag, arm_side, {}});
    } else {
        for (int u = start + L; u < geo.k; ++u)
            cells.push_back({gap_x(u), row + 4, std::string("arm.") + tag, arm_side, {}});
    }
    for (int q = 0; q < L; ++q) {
        int level = geo.level(glue_index, q);
        int x = gap_x(start + q);
        bool red_column = geo.variant == StrongVariant::Strong2 ? (q >= red_from && q < red_to)
                                                                : (q == red_to - 1);
        int lo = east ? row : row + 4 + level;
        int hi = east ? row + 3 + level : row + 4;
        for (int y = lo; y <= hi; ++y) {
            PlacedCell c{x, y, std::string("arm.") + tag, arm_side, {}};
            if (red_column && (east ? y == hi : y == lo)) {
                c.role = std::string("red.") + tag;
                c.red = std::make_pair(east ? North : South, red_glue());
            }
            cells.push_back(std::move(c));
        }
    }
    // Root: the arm cell touching the body.
    const int root_x = east ? b1 : b0 - 1;
    const int root_y = east ? row : row + 4;
    for (PlacedCell& c : cells)
        if (c.x == root_x && c.y == root_y) c.role = std::string("root.") + tag + "." + std::to_string(glue_index);
    return cells;
}

struct BuiltLayout {
    MacrotileLayout layout;
    std::vector<TileType> types;  // parallel to layout.positions
};

BuiltLayout build_layout(std::uint32_t tile, const TileSet& ts, const StrongGeometry& geo) {
    const int m = geo.m();
    std::vector<PlacedCell> cells;
    for (int x = geo.body_min(); x < geo.body_max(); ++x)
        for (int y = geo.body_min(); y < geo.body_max(); ++y)
            cells.push_back({x, y, (x == geo.body_min() && y == geo.body_min()) ? "corner" : "body", -1, {}});
    BuiltLayout out;
    out.layout.tile = tile;
    out.layout.k = geo.k;
    const TileType& t = ts.tile(tile);
    for (Side s : kSides) {
        ArmSpec& spec = out.layout.arms[s];
        spec.side = s;
        const Glue& g = t.glue(s);
        if (g.is_null()) continue;
        auto index = ts.glue_index(g);
        spec.glue_index = static_cast<int>(*index);
        spec.coords = glue_coordinates(g, ts.glues());
        spec.position = geo.lane_row(spec.coords.j);
        bool east_like = s == East || s == South;
        spec.length = east_like ? geo.k - geo.west_length(spec.coords.i) : geo.west_length(spec.coords.i);
        auto arm = horizontal_arm(geo, east_like, spec.glue_index, g);
        if (s == South || s == North) {
            for (PlacedCell& c : arm) {
                auto [rx, ry] = rotate_cw(c.x, c.y, m);
                c.x = rx;
                c.y = ry;
                c.arm = s;
                std::string tag(1, "NESW"[s]);
                auto dot = c.role.find('.');
                auto rest = c.role.substr(dot + 2);  // drop the E/W letter
                c.role = c.role.substr(0, dot + 1) + tag + rest;
                if (c.red) c.red->first = rotate_cw(c.red->first);
            }
        }
        cells.insert(cells.end(), arm.begin(), arm.end());
    }
    std::map<std::pair<int, int>, std::size_t> at;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!at.emplace(std::make_pair(cells[i].x, cells[i].y), i).second)
            throw Error(ErrorKind::BodyTooSmall, "macrotile cells collide at k = " + std::to_string(geo.k));
    }
    const Glue internal{"b", geo.tau};
    for (const PlacedCell& c : cells) {
        TileType type;
        for (Side s : kSides) {
            bool neighbor = at.count({c.x + kDx[s], c.y + kDy[s]}) > 0;
            if (neighbor) type.glues[s] = internal;
            if (c.red && c.red->first == s) {
                if (neighbor) throw Error(ErrorKind::BodyTooSmall, "red pad face is covered");
                type.glues[s] = c.red->second;
            }
        }
        std::string id = c.role + "[";
        for (Side s : kSides) {
            id += type.glues[s].is_null() ? "" : (type.glues[s].label == "b" ? "b" : type.glues[s].label);
            if (s != West) id += ",";
        }
        type.id = id + "]";
        out.layout.positions.emplace_back(c.x, c.y);
        out.layout.tile_ids.push_back(type.id);
        out.types.push_back(std::move(type));
    }
    return out;
}

}  // namespace

const char* variant_name(StrongVariant v) { return v == StrongVariant::Strong2 ? "strong2" : "strong1"; }

int glue_side_length(std::size_t glue_count) {
    int ell = 1;
    while (static_cast<std::size_t>(ell) * ell < glue_count) ++ell;
    return ell;
}

GlueCoordinates glue_coordinates(const Glue& g, const std::vector<Glue>& glues) {
    auto it = std::find(glues.begin(), glues.end(), g);
    if (it == glues.end()) throw Error(ErrorKind::InvalidArgument, "glue '" + g.label + "' is not in the glue set");
    int index = static_cast<int>(it - glues.begin());
    int ell = glue_side_length(glues.size());
    return GlueCoordinates{g, index / ell, index % ell, index};
}

int StrongGeometry::lane_row(int j) const { return k * j / ell + 1; }
int StrongGeometry::west_length(int i) const { return k * i / ell; }
int StrongGeometry::pad_start(int i) const { return k - west_length(i) - pad_length; }

int StrongGeometry::level(int glue_index, int column) const {
    if (column < 2 * code_bits) {
        int bit = (glue_index >> (code_bits - 1 - column / 2)) & 1;
        bool first = column % 2 == 0;
        return (bit == 1) == first ? 0 : -1;
    }
    if (column == 2 * code_bits) return 0;                 // guard
    if (column < 2 * code_bits + 1 + strength_width) return -2;
    return 0;                                             // wall
}

StrongGeometry strong_geometry(std::size_t glue_count, int tau, StrongVariant variant, std::optional<int> k) {
    StrongGeometry geo;
    geo.variant = variant;
    geo.tau = tau;
    geo.glue_count = static_cast<int>(glue_count);
    geo.ell = glue_side_length(glue_count);
    geo.code_bits = code_bits_for(glue_count);
    geo.strength_width = variant == StrongVariant::Strong2 ? tau : 1;
    geo.pad_length = 2 * geo.code_bits + 1 + geo.strength_width + 1;
    auto feasible = [&](int kk) {
        if (kk < 4 || kk % 2 != 0) return false;
        geo.k = kk;
        for (int i = 0; i + 1 < geo.ell; ++i)
            if (geo.west_length(i + 1) - geo.west_length(i) < geo.pad_length) return false;
        if (kk - geo.west_length(geo.ell - 1) < geo.pad_length) return false;
        for (int j = 0; j + 1 < geo.ell; ++j)
            if (geo.lane_row(j + 1) - geo.lane_row(j) < 6) return false;
        return geo.lane_row(geo.ell - 1) + 4 <= kk - 2;
    };
    if (k) {
        if (!feasible(*k))
            throw Error(ErrorKind::BodyTooSmall, "body side " + std::to_string(*k) + " cannot hold the arm pads");
        return geo;
    }
    for (int kk = 4; kk < 1 << 20; kk += 2)
        if (feasible(kk)) return geo;
    throw Error(ErrorKind::BodyTooSmall, "no feasible body side");
}

MacrotileLayout layout_macrotile(std::uint32_t tile, const TileSet& ts, const StrongGeometry& geo) {
    return build_layout(tile, ts, geo).layout;
}

CompiledSimulator compile_strong(const TAS& tas, StrongVariant variant, const StrongOptions& options) {
    if (tas.temperature < 2) throw Error(ErrorKind::InvalidArgument, "strong compilation needs tau >= 2");
    const TileSet& ts = tas.tiles;
    if (ts.max_strength() > tas.temperature)
        throw Error(ErrorKind::InvalidArgument, "glue strengths above tau are not representable");
    StrongGeometry geo = strong_geometry(ts.glues().size(), tas.temperature, variant, options.k);
    const int m = geo.m();

    std::vector<BuiltLayout> built;
    std::map<std::string, TileType> types;
    for (std::uint32_t t = 0; t < ts.size(); ++t) {
        built.push_back(build_layout(t, ts, geo));
        for (const TileType& type : built.back().types) types.emplace(type.id, type);
    }
    std::vector<TileType> universal;
    for (auto& [id, type] : types) universal.push_back(type);
    TileSet u(universal);

    CompiledSimulator out;
    out.method = variant_name(variant);
    out.m = m;
    out.k = geo.k;
    out.decoder.kind = DecoderKind::Macrotile;
    out.decoder.k = geo.k;
    std::map<std::array<int, 4>, std::uint32_t> by_glues;
    for (std::uint32_t t = 0; t < ts.size(); ++t) {
        const MacrotileLayout& layout = built[t].layout;
        std::vector<Cell> expected;
        for (std::size_t c = 0; c < layout.positions.size(); ++c) {
            auto [x, y] = layout.positions[c];
            if (x >= 0 && y >= 0 && x < m && y < m) expected.push_back({x, y, u.require(layout.tile_ids[c])});
        }
        std::sort(expected.begin(), expected.end());
        out.decoder.entries.emplace_back(t, std::move(expected));
        std::array<int, 4> key{};
        for (Side s : kSides) key[s] = layout.arms[s].glue_index;
        if (auto [it, fresh] = by_glues.emplace(key, t); !fresh)
            throw Error(ErrorKind::InvalidArgument, "tile types '" + ts.tile(it->second).id + "' and '" +
                                                        ts.tile(t).id + "' carry identical glues");
        out.layouts.push_back(layout);
        out.max_cells_per_tile = std::max(out.max_cells_per_tile, layout.positions.size());
    }

    auto macrotile_cells = [&](std::uint32_t t, int bx, int by, Assembly& into) {
        const MacrotileLayout& layout = built[t].layout;
        for (std::size_t c = 0; c < layout.positions.size(); ++c)
            into.push_back({layout.positions[c].first + bx * m, layout.positions[c].second + by * m,
                            u.require(layout.tile_ids[c])});
    };

    out.simulator.tiles = u;
    out.simulator.temperature = options.simulator_temperature.value_or(tas.temperature);
    for (const auto& [s, count] : tas.initial) {
        Assembly cells;
        for (const Cell& c : s.cells) macrotile_cells(c.tile, c.x, c.y, cells);
        out.simulator.initial.emplace_back(canonicalize(std::move(cells), u), count);
    }
    validate_tas(out.simulator);

    out.rep = table_representation(u, out.decoder);
    out.parameters = {{"k", geo.k},
                      {"tau", tas.temperature},
                      {"simulator_tau", out.simulator.temperature},
                      {"pad_length", geo.pad_length},
                      {"lanes", geo.ell}};
    return out;
}

std::optional<std::uint32_t> geometric_decode(const std::vector<Cell>& block, const CompiledSimulator& compiled) {
    return compiled.rep.decode(block);
}

TAS rescale_temperature(const TAS& tas, int factor) {
    if (factor < 1) throw Error(ErrorKind::InvalidArgument, "rescale factor must be positive");
    std::vector<TileType> tiles = tas.tiles.tiles();
    for (TileType& t : tiles)
        for (Glue& g : t.glues) g.strength *= factor;
    TAS out;
    out.tiles = TileSet(std::move(tiles));
    out.temperature = tas.temperature * factor;
    for (const auto& [s, count] : tas.initial) out.initial.emplace_back(translate_ids(s, tas.tiles, out.tiles), count);
    return out;
}

}  // namespace tilesim
