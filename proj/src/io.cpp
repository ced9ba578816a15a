#include "tilesim/io.hpp"

#include "tilesim/combine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tilesim {
namespace {

constexpr const char* kSideKeys[4] = {"north", "east", "south", "west"};

Error schema(const std::string& where, const std::string& what) {
    return Error(ErrorKind::SchemaError, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw schema(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw schema(where, std::string("missing field '") + key + "'");
    return *it;
}

long long integer(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw schema(where, "expected an integer");
    return v.get<long long>();
}

std::string text(const Json& v, const std::string& where) {
    if (!v.is_string()) throw schema(where, "expected a string");
    return v.get<std::string>();
}

Json glue_to_json(const Glue& g) { return Json{{"label", g.label}, {"strength", g.strength}}; }

Json cells_to_json(const std::vector<Cell>& cells, const TileSet& ts) {
    Json out = Json::array();
    for (const Cell& c : cells) out.push_back(Json{{"x", c.x}, {"y", c.y}, {"tile", ts.tile(c.tile).id}});
    return out;
}

Assembly cells_from_json(const Json& v, const TileSet& ts, const std::string& where) {
    if (!v.is_array()) throw schema(where, "expected a list of cells");
    if (v.empty()) throw Error(ErrorKind::EmptyAssembly, where + ": empty placement");
    Assembly cells;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const std::string id = text(field(v[i], "tile", at), at + ".tile");
        auto tile = ts.find(id);
        if (!tile) throw Error(ErrorKind::DanglingTileId, at + ".tile: unknown tile id '" + id + "'");
        cells.push_back({static_cast<int>(integer(field(v[i], "x", at), at + ".x")),
                         static_cast<int>(integer(field(v[i], "y", at), at + ".y")), *tile});
    }
    return cells;
}

Json count_to_json(const Count& c) { return c.infinite ? Json("inf") : Json(c.value); }

Count count_from_json(const Json& v, const std::string& where) {
    if (v.is_string()) {
        if (v.get<std::string>() != "inf") throw schema(where, "count must be a positive integer or \"inf\"");
        return Count::inf();
    }
    long long n = integer(v, where);
    if (n <= 0) throw schema(where, "count must be positive");
    return Count::finite(static_cast<std::uint64_t>(n));
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json tas_to_json(const TAS& tas) {
    Json tiles = Json::array();
    for (const TileType& t : tas.tiles.tiles()) {
        Json tile{{"id", t.id}};
        for (Side s : kSides) tile[kSideKeys[s]] = glue_to_json(t.glues[s]);
        tiles.push_back(std::move(tile));
    }
    Json initial = Json::array();
    for (const auto& [s, count] : tas.initial)
        initial.push_back(Json{{"count", count_to_json(count)}, {"placement", cells_to_json(s.cells, tas.tiles)}});
    return Json{{"temperature", tas.temperature}, {"tiles", std::move(tiles)}, {"initial_state", std::move(initial)}};
}

TAS tas_from_json(const Json& doc) {
    if (!doc.is_object()) throw schema("document", "expected an object");
    TAS tas;
    long long tau = integer(field(doc, "temperature", "document"), "temperature");
    if (tau < 1) throw schema("temperature", "must be positive");
    tas.temperature = static_cast<int>(tau);
    const Json& tiles = field(doc, "tiles", "document");
    if (!tiles.is_array()) throw schema("tiles", "expected a list");
    std::vector<TileType> types;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const std::string at = "tiles[" + std::to_string(i) + "]";
        TileType t;
        t.id = text(field(tiles[i], "id", at), at + ".id");
        for (Side s : kSides) {
            auto it = tiles[i].find(kSideKeys[s]);
            if (it == tiles[i].end() || it->is_null()) continue;
            const std::string where = at + "." + kSideKeys[s];
            Glue g;
            long long strength = integer(field(*it, "strength", where), where + ".strength");
            if (strength < 0)
                throw Error(ErrorKind::NegativeStrength, where + ".strength: negative strength " + std::to_string(strength));
            g.strength = static_cast<int>(strength);
            auto label = it->find("label");
            if (label != it->end()) g.label = text(*label, where + ".label");
            if (g.strength > 0 && g.label.empty()) throw schema(where + ".label", "positive glue needs a label");
            t.glues[s] = g;
        }
        types.push_back(std::move(t));
    }
    tas.tiles = TileSet(std::move(types));
    auto initial = doc.find("initial_state");
    if (initial == doc.end() || initial->is_null()) {
        tas.initial = default_initial_state(tas.tiles);
    } else {
        if (!initial->is_array()) throw schema("initial_state", "expected a list");
        for (std::size_t i = 0; i < initial->size(); ++i) {
            const std::string at = "initial_state[" + std::to_string(i) + "]";
            const Json& entry = (*initial)[i];
            Count count = count_from_json(field(entry, "count", at), at + ".count");
            Assembly cells = cells_from_json(field(entry, "placement", at), tas.tiles, at + ".placement");
            tas.initial.emplace_back(canonicalize(std::move(cells), tas.tiles), count);
        }
    }
    validate_tas(tas);
    return tas;
}

std::string serialize_tas(const TAS& tas) { return dump(tas_to_json(tas)); }

TAS parse_tas(const std::string& text_in) {
    Json doc;
    try {
        doc = Json::parse(text_in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what());
    }
    return tas_from_json(doc);
}

Json compiled_to_json(const CompiledSimulator& compiled) {
    Json blocks = Json::array();
    for (const auto& [tile, cells] : compiled.decoder.entries)
        blocks.push_back(Json{{"tile", static_cast<int>(tile)}, {"cells", cells_to_json(cells, compiled.simulator.tiles)}});
    Json parameters = Json::object();
    for (const auto& [key, value] : compiled.parameters) parameters[key] = value;
    return Json{{"method", compiled.method},
                {"scale", compiled.m},
                {"max_cells_per_tile", compiled.max_cells_per_tile},
                {"parameters", std::move(parameters)},
                {"simulator", tas_to_json(compiled.simulator)},
                {"decoder",
                 Json{{"kind", decoder_kind_name(compiled.decoder.kind)},
                      {"k", compiled.decoder.k},
                      {"blocks", std::move(blocks)}}}};
}

CompiledSimulator compiled_from_json(const Json& doc, const TAS& target) {
    CompiledSimulator out;
    out.method = text(field(doc, "method", "document"), "method");
    out.m = static_cast<int>(integer(field(doc, "scale", "document"), "scale"));
    out.max_cells_per_tile = static_cast<std::size_t>(integer(field(doc, "max_cells_per_tile", "document"), "max_cells_per_tile"));
    const Json& parameters = field(doc, "parameters", "document");
    if (!parameters.is_object()) throw schema("parameters", "expected an object");
    for (const auto& [key, value] : parameters.items())
        out.parameters[key] = static_cast<int>(integer(value, "parameters." + key));
    out.simulator = tas_from_json(field(doc, "simulator", "document"));
    const Json& decoder = field(doc, "decoder", "document");
    out.decoder.kind = parse_decoder_kind(text(field(decoder, "kind", "decoder"), "decoder.kind"));
    out.decoder.k = static_cast<int>(integer(field(decoder, "k", "decoder"), "decoder.k"));
    out.k = out.decoder.k;
    if (out.decoder.m() != out.m) throw schema("scale", "does not match the decoder geometry");
    const Json& blocks = field(decoder, "blocks", "decoder");
    if (!blocks.is_array()) throw schema("decoder.blocks", "expected a list");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string at = "decoder.blocks[" + std::to_string(i) + "]";
        long long tile = integer(field(blocks[i], "tile", at), at + ".tile");
        if (tile < 0 || static_cast<std::size_t>(tile) >= target.tiles.size())
            throw Error(ErrorKind::DanglingTileId, at + ".tile: no such tile in the simulated system");
        Assembly cells = cells_from_json(field(blocks[i], "cells", at), out.simulator.tiles, at + ".cells");
        std::sort(cells.begin(), cells.end());
        out.decoder.entries.emplace_back(static_cast<std::uint32_t>(tile), std::move(cells));
    }
    out.rep = table_representation(out.simulator.tiles, out.decoder);
    return out;
}

std::string serialize_compiled(const CompiledSimulator& compiled) { return dump(compiled_to_json(compiled)); }

CompiledSimulator parse_compiled(const std::string& text_in, const TAS& target) {
    Json doc;
    try {
        doc = Json::parse(text_in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what());
    }
    return compiled_from_json(doc, target);
}

Json supertile_to_json(const Supertile& s, const TileSet& ts) {
    return Json{{"fingerprint", fingerprint_hex(s.fingerprint)}, {"size", s.size()}, {"cells", cells_to_json(s.cells, ts)}};
}

Json report_to_json(const RelationReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
        Json witnesses = Json::array();
        for (std::uint64_t fp : v.witnesses) witnesses.push_back(fingerprint_hex(fp));
        violations.push_back(Json{{"kind", v.kind}, {"detail", v.detail}, {"witnesses", std::move(witnesses)}});
    }
    return Json{{"relation", r.relation},
                {"pass", r.pass},
                {"sim_bound", r.sim_bound},
                {"target_bound", r.target_bound},
                {"checked", r.checked},
                {"boundary_cases", r.boundary_cases},
                {"unmapped", r.unmapped},
                {"images", r.images},
                {"sim_overflow", r.sim_overflow},
                {"target_overflow", r.target_overflow},
                {"violations", std::move(violations)}};
}

Json producible_set_to_json(const ProducibleSet& p) {
    Json supertiles = Json::array();
    for (const Supertile& s : p.supertiles) supertiles.push_back(supertile_to_json(s, p.tas.tiles));
    Json edges = Json::array();
    for (const ProductionEdge& e : p.edges)
        edges.push_back(Json{{"a", fingerprint_hex(p.supertiles[e.parent_a].fingerprint)},
                             {"b", fingerprint_hex(p.supertiles[e.parent_b].fingerprint)},
                             {"child", fingerprint_hex(p.supertiles[e.child].fingerprint)}});
    return Json{{"size_bound", p.size_bound},
                {"step_bound", p.step_bound ? Json(*p.step_bound) : Json(nullptr)},
                {"rounds", p.rounds},
                {"step_limited", p.step_limited},
                {"overflow", p.overflow},
                {"supertiles", std::move(supertiles)},
                {"edges", std::move(edges)}};
}

std::string render_svg(const Supertile& s, const TileSet& ts, const RenderOptions& options) {
    const int u = options.unit;
    int max_x = 0, max_y = 0;
    for (const Cell& c : s.cells) {
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    const int width = (max_x + 1) * u;
    const int height = (max_y + 1) * u;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    auto px = [&](int x) { return x * u; };
    auto py = [&](int y) { return (max_y - y) * u; };  // north is up
    for (const Cell& c : s.cells) {
        out << "<rect x=\"" << px(c.x) << "\" y=\"" << py(c.y) << "\" width=\"" << u << "\" height=\"" << u
            << "\" fill=\"#e8eef7\" stroke=\"#34495e\" stroke-width=\"1\"/>\n";
        if (options.show_ids)
            out << "<text x=\"" << px(c.x) + u / 2 << "\" y=\"" << py(c.y) + u / 2
                << "\" font-size=\"" << std::max(4, u / 4) << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                << xml_escape(ts.tile(c.tile).id) << "</text>\n";
    }
    for (const Cell& c : s.cells) {
        for (Side side : kSides) {
            const int strength = ts.strength(c.tile, side);
            if (strength <= 0) continue;
            auto neighbor = tile_at(s, c.x + kDx[side], c.y + kDy[side]);
            // Edge midpoint, and a short segment across it.
            const int mx = px(c.x) + u / 2 + kDx[side] * u / 2;
            const int my = py(c.y) + u / 2 - kDy[side] * u / 2;
            const int hx = kDx[side] * u / 6, hy = -kDy[side] * u / 6;
            if (neighbor) {
                if (side != East && side != North) continue;  // each shared edge once
                if (ts.interaction(c.tile, side, *neighbor) == 0) continue;
                out << "<line class=\"tick\" x1=\"" << mx - hx << "\" y1=\"" << my - hy << "\" x2=\"" << mx + hx
                    << "\" y2=\"" << my + hy << "\" stroke=\"#c0392b\" stroke-width=\"" << strength << "\"/>\n";
            } else {
                out << "<line class=\"glue\" x1=\"" << mx - hx << "\" y1=\"" << my - hy << "\" x2=\"" << mx
                    << "\" y2=\"" << my << "\" stroke=\"#27ae60\" stroke-width=\"" << strength << "\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text_out) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text_out;
}

}  // namespace tilesim
