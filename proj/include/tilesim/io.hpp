// JSON documents for systems and compiled simulators, reports, SVG rendering.
#pragma once

#include "tilesim/strong.hpp"
#include "tilesim/verify.hpp"

#include "json.hpp"

namespace tilesim {

using Json = nlohmann::json;

Json tas_to_json(const TAS& tas);
TAS tas_from_json(const Json& doc);  // SchemaError, NegativeStrength, DanglingTileId

std::string serialize_tas(const TAS& tas);
TAS parse_tas(const std::string& text);

Json compiled_to_json(const CompiledSimulator& compiled);
CompiledSimulator compiled_from_json(const Json& doc, const TAS& target);

std::string serialize_compiled(const CompiledSimulator& compiled);
CompiledSimulator parse_compiled(const std::string& text, const TAS& target);

Json supertile_to_json(const Supertile& s, const TileSet& ts);
Json report_to_json(const RelationReport& report);
Json producible_set_to_json(const ProducibleSet& p);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

struct RenderOptions {
    int unit = 24;
    bool show_ids = true;
};

// One rect per tile; ticks on bound edges and on exposed glues.
std::string render_svg(const Supertile& s, const TileSet& ts, const RenderOptions& options = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tilesim
