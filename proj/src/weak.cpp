#include "tilesim/weak.hpp"

#include "tilesim/combine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace tilesim {
namespace {

// Components: 0 megatile, 1 + side gadget, 5 + side completion.
constexpr int kMegatile = 0;
int gadget_component(Side s) { return 1 + s; }
int completion_component(Side s) { return 5 + s; }

struct Piece {
    int x = 0;
    int y = 0;
    std::string role;
    int component = kMegatile;  // in a side frame: 0 megatile, 1 gadget, 2 completion
};

struct Special {
    int x = 0;
    int y = 0;
    Side face = North;
    std::string label;   // "att" and "cp<s>" get the side letter appended
    int strength = 0;
    bool side_suffix = false;
};

struct Frame {
    std::vector<Piece> pieces;
    std::vector<Special> specials;
};

struct GlueSlot {
    int index = 0;
    int strength = 0;
};

int strength_columns(WeakVariant variant, int tau) {
    switch (variant) {
        case WeakVariant::Weak1: return 1;
        case WeakVariant::Weak2: return tau;
        case WeakVariant::Weak3: return std::bit_width(static_cast<unsigned>(tau));
    }
    return 1;
}

// East (or west) side of one megatile with its optional gadget and completion.
Frame side_frame(const WeakGeometry& geo, bool east, std::uint32_t tile, std::optional<GlueSlot> glue) {
    Frame f;
    const StrongGeometry& a = geo.arms;
    const int K = geo.k();
    const int b0 = geo.body_min();
    const int b1 = geo.body_max();
    const int tooth_x = east ? b1 : b0 - 1;
    const int backbone_x = east ? b1 + 1 : b0 - 2;
    const Side outward = east ? East : West;
    auto gap_x = [&](int u) { return east ? b1 + 2 + u : b0 - 2 - K + u; };

    f.pieces.push_back({tooth_x, b0, "anchor", 0});
    f.specials.push_back({tooth_x, b0, outward, "att", geo.tau, true});
    std::vector<int> free_rows;
    for (int q = 0; q < geo.teeth_bits; ++q) {
        bool bit = (tile >> (geo.teeth_bits - 1 - q)) & 1;
        int first = b0 + 1 + 2 * q;
        f.pieces.push_back({tooth_x, bit ? first : first + 1, "tooth", 0});
        free_rows.push_back(bit ? first + 1 : first);
    }
    if (!glue) return f;

    const int p = glue->index;
    const int s = glue->strength;
    const int r = a.lane_row(p % a.ell);
    const int start = a.pad_start(p / a.ell);
    const int L = a.pad_length;
    const int nb = a.code_bits;
    const int first_strength = 2 * nb + 1;
    for (int y : free_rows) f.pieces.push_back({tooth_x, y, "plate", 1});
    const int top = std::max(2 * geo.teeth_bits, r + 5);
    for (int y = b0; y <= b0 + top; ++y) f.pieces.push_back({backbone_x, y, "backbone", 1});
    f.specials.push_back({backbone_x, b0, opposite(outward), "att", geo.tau, true});

    if (east) {
        for (int u = 0; u < start; ++u) f.pieces.push_back({gap_x(u), b0 + r, "arm", 1});
    } else {
        // Runs above the pad so the completion does not cut the gadget in two.
        for (int u = start; u < K; ++u) f.pieces.push_back({gap_x(u), b0 + r + 5, "arm", 1});
    }
    const int cp_row = east ? b0 + r : b0 + r + 4;
    for (int q = 0; q < L; ++q) {
        const int level = a.level(p, q);
        const int x = gap_x(start + q);
        const int lo = east ? b0 + r : b0 + r + 4 + level;
        const int hi = east ? b0 + r + 3 + level : b0 + r + 4;
        const bool strength_column = q >= first_strength && q < first_strength + a.strength_width;
        const char* role = q < 2 * nb ? "code" : q == 2 * nb ? "guard" : strength_column ? "comp" : "wall";
        const bool completion = strength_column || q == L - 1;
        for (int y = lo; y <= hi; ++y) f.pieces.push_back({x, y, role, completion ? 2 : 1});
        if (strength_column) {
            const int c = q - first_strength;
            const int red_y = east ? hi : lo;
            const Side face = east ? North : South;
            std::optional<Glue> red;
            switch (geo.variant) {
                case WeakVariant::Weak1: {
                    int v = s < geo.tau ? s : geo.tau - 1;
                    red = Glue{"red" + std::to_string(v), v};
                    break;
                }
                case WeakVariant::Weak2:
                    if (c < s) red = Glue{"red", 1};
                    break;
                case WeakVariant::Weak3:
                    if ((s >> c) & 1) red = Glue{"red" + std::to_string(1 << c), 1 << c};
                    break;
            }
            if (red) {
                for (Piece& piece : f.pieces)
                    if (piece.x == x && piece.y == red_y) piece.role = "red";
                f.specials.push_back({x, red_y, face, red->label, red->strength, false});
            }
        }
        if (q == L - 1 && geo.variant == WeakVariant::Weak1 && s == geo.tau)
            f.specials.push_back({x, east ? hi : lo, east ? North : South, "wx", 1, false});
    }
    f.specials.push_back({gap_x(start + first_strength), cp_row, West, "cp" + std::to_string(s), geo.tau, true});
    f.specials.push_back({gap_x(start + 2 * nb), cp_row, East, "cp" + std::to_string(s), geo.tau, true});
    return f;
}

struct BuiltCell {
    int x = 0;
    int y = 0;
    int component = kMegatile;
    TileType type;
};

std::vector<BuiltCell> build_tile(const WeakGeometry& geo, const TileSet& ts, std::uint32_t tile) {
    const int m = geo.m();
    std::vector<Piece> pieces;
    std::vector<Special> specials;
    for (int x = geo.body_min(); x < geo.body_max(); ++x)
        for (int y = geo.body_min(); y < geo.body_max(); ++y)
            pieces.push_back({x, y, (x == geo.body_min() && y == geo.body_min()) ? "corner" : "body", kMegatile});
    for (Side s : kSides) {
        const Glue& g = ts.tile(tile).glue(s);
        std::optional<GlueSlot> slot;
        if (!g.is_null()) slot = GlueSlot{static_cast<int>(*ts.glue_index(g)), g.strength};
        Frame f = side_frame(geo, s == East || s == South, tile, slot);
        const bool rotate = s == South || s == North;
        const std::string letter(1, "NESW"[s]);
        for (Piece& piece : f.pieces) {
            if (rotate) std::tie(piece.x, piece.y) = std::make_pair(piece.y, m - 1 - piece.x);
            piece.role += "." + letter;
            piece.component = piece.component == 0 ? kMegatile
                              : piece.component == 1 ? gadget_component(s)
                                                     : completion_component(s);
            pieces.push_back(std::move(piece));
        }
        for (Special& sp : f.specials) {
            if (rotate) {
                std::tie(sp.x, sp.y) = std::make_pair(sp.y, m - 1 - sp.x);
                sp.face = static_cast<Side>((sp.face + 1) % 4);
            }
            if (sp.side_suffix) sp.label += "." + letter;
            specials.push_back(std::move(sp));
        }
    }
    std::map<std::pair<int, int>, std::size_t> at;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!at.emplace(std::make_pair(pieces[i].x, pieces[i].y), i).second)
            throw Error(ErrorKind::BodyTooSmall, "megatile parts collide at k = " + std::to_string(geo.k()));
    std::vector<BuiltCell> out(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& piece = pieces[i];
        out[i].x = piece.x;
        out[i].y = piece.y;
        out[i].component = piece.component;
        for (Side s : kSides) {
            auto it = at.find({piece.x + kDx[s], piece.y + kDy[s]});
            if (it != at.end() && pieces[it->second].component == piece.component)
                out[i].type.glues[s] = Glue{"b", geo.tau};
        }
    }
    for (const Special& sp : specials) {
        std::size_t i = at.at({sp.x, sp.y});
        if (!out[i].type.glues[sp.face].is_null())
            throw Error(ErrorKind::BodyTooSmall, "special glue on an internal face");
        out[i].type.glues[sp.face] = Glue{sp.label, sp.strength};
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string id = pieces[i].role + "[";
        for (Side s : kSides) {
            id += out[i].type.glues[s].label;
            if (s != West) id += ",";
        }
        out[i].type.id = id + "]";
    }
    return out;
}

void add_input(std::vector<std::pair<Supertile, Count>>& inputs, Supertile s, Count count) {
    for (auto& [existing, c] : inputs) {
        if (existing == s) {
            if (count.infinite || c.infinite) c = Count::inf();
            else c.value += count.value;
            return;
        }
    }
    inputs.emplace_back(std::move(s), count);
}

}  // namespace

const char* variant_name(WeakVariant v) {
    switch (v) {
        case WeakVariant::Weak1: return "weak1";
        case WeakVariant::Weak2: return "weak2";
        case WeakVariant::Weak3: return "weak3";
    }
    return "weak";
}

WeakGeometry weak_geometry(std::size_t tile_count, std::size_t glue_count, int tau, WeakVariant variant) {
    WeakGeometry geo;
    geo.variant = variant;
    geo.tau = tau;
    geo.teeth_bits = 1;
    while ((std::size_t{1} << geo.teeth_bits) < tile_count) ++geo.teeth_bits;
    StrongGeometry& a = geo.arms;
    a.tau = tau;
    a.glue_count = static_cast<int>(glue_count);
    a.ell = glue_side_length(glue_count);
    a.code_bits = 1;
    while ((std::size_t{1} << a.code_bits) < glue_count) ++a.code_bits;
    a.strength_width = strength_columns(variant, tau);
    a.pad_length = 2 * a.code_bits + 1 + a.strength_width + 1;
    for (int k = 4; k < 1 << 20; k += 2) {
        a.k = k;
        bool ok = 1 + 2 * geo.teeth_bits <= k;
        for (int i = 0; ok && i + 1 < a.ell; ++i) ok = a.west_length(i + 1) - a.west_length(i) >= a.pad_length;
        ok = ok && k - a.west_length(a.ell - 1) >= a.pad_length;
        for (int j = 0; ok && j + 1 < a.ell; ++j) ok = a.lane_row(j + 1) - a.lane_row(j) >= 6;
        ok = ok && a.lane_row(a.ell - 1) + 4 <= k - 2;
        if (ok) return geo;
    }
    throw Error(ErrorKind::BodyTooSmall, "no feasible megatile side");
}

CompiledSimulator compile_weak(const TAS& tas, WeakVariant variant) {
    if (tas.temperature < 2) throw Error(ErrorKind::InvalidArgument, "weak compilation needs tau >= 2");
    const TileSet& ts = tas.tiles;
    if (ts.max_strength() > tas.temperature)
        throw Error(ErrorKind::InvalidArgument, "glue strengths above tau are not representable");
    WeakGeometry geo = weak_geometry(ts.size(), ts.glues().size(), tas.temperature, variant);
    const int m = geo.m();

    std::vector<std::vector<BuiltCell>> built;
    std::map<std::string, TileType> types;
    for (std::uint32_t t = 0; t < ts.size(); ++t) {
        built.push_back(build_tile(geo, ts, t));
        for (const BuiltCell& c : built.back()) types.emplace(c.type.id, c.type);
    }
    std::vector<TileType> universal;
    for (auto& [id, type] : types) universal.push_back(type);
    TileSet u(universal);

    auto meta = std::make_shared<WeakMetadata>();
    meta->geo = geo;
    meta->megatiles.resize(ts.size());
    meta->gadgets.resize(ts.size());
    meta->completions.resize(ts.size());
    CompiledSimulator out;
    for (std::uint32_t t = 0; t < ts.size(); ++t) {
        for (const BuiltCell& c : built[t]) {
            Cell cell{c.x, c.y, u.require(c.type.id)};
            if (c.component == kMegatile) meta->megatiles[t].push_back(cell);
            else if (c.component < 5) meta->gadgets[t][c.component - 1].push_back(cell);
            else meta->completions[t][c.component - 5].push_back(cell);
        }
        std::sort(meta->megatiles[t].begin(), meta->megatiles[t].end());
        out.max_cells_per_tile = std::max(out.max_cells_per_tile, built[t].size());
    }

    out.decoder.kind = DecoderKind::Megatile;
    out.decoder.k = geo.k();
    for (std::uint32_t t = 0; t < ts.size(); ++t) out.decoder.entries.emplace_back(t, meta->megatiles[t]);

    std::set<std::uint32_t> used;
    std::vector<std::pair<Supertile, Count>> inputs;
    auto shifted = [&](const Assembly& cells, int bx, int by, Assembly& into) {
        for (const Cell& c : cells) into.push_back({c.x + bx * m, c.y + by * m, c.tile});
    };
    for (const auto& [s, count] : tas.initial) {
        for (const Cell& c : s.cells) used.insert(c.tile);
        Assembly cells;
        for (const Cell& c : s.cells) shifted(meta->megatiles[c.tile], c.x, c.y, cells);
        // Gadgets only where the represented assembly binds.
        for (const Cell& c : s.cells) {
            for (Side side : kSides) {
                auto other = tile_at(s, c.x + kDx[side], c.y + kDy[side]);
                if (!other || ts.interaction(c.tile, side, *other) == 0) continue;
                shifted(meta->gadgets[c.tile][side], c.x, c.y, cells);
                shifted(meta->completions[c.tile][side], c.x, c.y, cells);
            }
        }
        add_input(inputs, canonicalize(std::move(cells), u), count);
    }
    for (std::uint32_t t : used) {
        for (Side side : kSides) {
            if (meta->gadgets[t][side].empty()) continue;
            add_input(inputs, canonicalize(meta->gadgets[t][side], u), Count::inf());
            add_input(inputs, canonicalize(meta->completions[t][side], u), Count::inf());
        }
    }
    out.method = variant_name(variant);
    out.simulator.tiles = u;
    out.simulator.temperature = tas.temperature;
    out.simulator.initial = std::move(inputs);
    validate_tas(out.simulator);

    out.m = m;
    out.k = geo.k();
    out.rep = table_representation(u, out.decoder);
    out.parameters = {{"k", geo.k()},
                      {"tau", tas.temperature},
                      {"simulator_tau", tas.temperature},
                      {"teeth_bits", geo.teeth_bits},
                      {"pad_length", geo.arms.pad_length},
                      {"lanes", geo.arms.ell}};
    out.weak = meta;
    return out;
}

std::vector<AttachmentSite> gadget_attachment_sites(const Supertile& s, const CompiledSimulator& compiled,
                                                    const TileSet& target_tiles) {
    if (!compiled.weak) throw Error(ErrorKind::InvalidArgument, "not a weak compilation");
    DecodeResult d = decode_supertile(s, compiled.rep, target_tiles);
    if (d.status != DecodeStatus::Ok) throw Error(ErrorKind::NoValidAlignment, "supertile does not decode");
    const int m = compiled.m;
    std::set<std::pair<int, int>> occupied;
    for (const Cell& c : s.cells) occupied.insert({c.x + d.image.offset_x, c.y + d.image.offset_y});
    std::vector<AttachmentSite> sites;
    for (const Cell& block : d.image.image) {
        for (Side side : kSides) {
            const Assembly& gadget = compiled.weak->gadgets[block.tile][side];
            if (gadget.empty()) continue;
            bool clear = std::none_of(gadget.begin(), gadget.end(), [&](const Cell& c) {
                return occupied.count({c.x + block.x * m, c.y + block.y * m}) > 0;
            });
            if (clear)
                sites.push_back({block.x, block.y, block.tile, side, canonicalize(gadget, compiled.simulator.tiles)});
        }
    }
    return sites;
}

}  // namespace tilesim
