// Block representation functions and bounded simulation-relation checks.
#pragma once

#include "tilesim/dynamics.hpp"

#include <functional>
#include <map>
#include <set>

namespace tilesim {

struct BlockRepresentation {
    int m = 1;
    // Cells of one m-block in local coordinates [0, m)^2, sorted; returns a target tile index.
    // May throw CorruptMacrotile.
    std::function<std::optional<std::uint32_t>(const std::vector<Cell>&)> decode;
    // Offsets to try for a supertile. Unset means all m^2 offsets; a decoder may
    // narrow this when every other offset provably decodes to nothing.
    std::function<std::vector<std::pair<int, int>>(const Supertile&)> candidate_offsets;
};

BlockRepresentation lookup_representation(int m, std::map<std::vector<Cell>, std::uint32_t> table);

struct DecodedImage {
    int offset_x = 0;
    int offset_y = 0;
    Assembly image;                                   // target tiles at block coordinates
    std::vector<std::pair<int, int>> nonempty_blocks; // sorted
    bool clean = false;
};

enum class DecodeStatus { Ok, NoValidAlignment, AmbiguousAlignment, Corrupt };
const char* decode_status_name(DecodeStatus status);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::NoValidAlignment;
    DecodedImage image;
    Supertile target;  // canonical image, set when status is Ok
    std::string message;
};

// Image under one offset; the cell at (x, y) lands in block floor((x + ox) / m).
DecodedImage decode_at(const Supertile& s, const BlockRepresentation& rep, int offset_x, int offset_y);

DecodeResult decode_supertile(const Supertile& s, const BlockRepresentation& rep, const TileSet& target_tiles);

// Every non-empty block is in or orthogonally next to the image domain, or there is at most one block.
bool is_clean(const DecodedImage& img);

struct Violation {
    std::string kind;
    std::string detail;
    std::vector<std::uint64_t> witnesses;
};

struct RelationReport {
    std::string relation;
    bool pass = true;
    std::size_t sim_bound = 0;
    std::size_t target_bound = 0;
    std::size_t checked = 0;
    std::size_t boundary_cases = 0;
    std::size_t unmapped = 0;
    std::size_t images = 0;
    std::size_t sim_overflow = 0;
    std::size_t target_overflow = 0;
    std::vector<Violation> violations;

    void add(Violation v) {
        pass = false;
        violations.push_back(std::move(v));
    }
};

enum class WeakDefinition { Standard, Literal };

// Decoded images of every simulator supertile, shared by the checks.
class SimulationContext {
public:
    SimulationContext(const ProducibleSet& sim, const ProducibleSet& target, const BlockRepresentation& rep);

    const ProducibleSet& sim() const { return sim_; }
    const ProducibleSet& target() const { return target_; }
    const DecodeResult& decoded(std::size_t i) const { return decoded_[i]; }
    // Index of the image in the target set; nullopt if undefined, over the bound, or not producible.
    std::optional<std::size_t> image(std::size_t i) const { return image_[i]; }
    bool over_bound(std::size_t i) const { return over_bound_[i]; }
    const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
    // Nodes reachable from i by zero or more sim combination steps (as a parent).
    std::vector<char> reachable(std::size_t i) const;
    bool target_step(std::size_t from, std::size_t to) const;  // ->(<=1) in the target

private:
    const ProducibleSet& sim_;
    const ProducibleSet& target_;
    std::vector<DecodeResult> decoded_;
    std::vector<std::optional<std::size_t>> image_;
    std::vector<char> over_bound_;
    std::vector<std::vector<std::size_t>> children_;
    std::set<std::pair<std::size_t, std::size_t>> target_steps_;
};

RelationReport check_equivalent_productions(const SimulationContext& ctx);
RelationReport check_follows(const SimulationContext& ctx);
RelationReport check_weakly_models(const SimulationContext& ctx, WeakDefinition def = WeakDefinition::Standard);
RelationReport check_strongly_models(const SimulationContext& ctx);

}  // namespace tilesim
