// Runs the four simulation relations for a compiled simulator.
#pragma once

#include "tilesim/strong.hpp"

namespace tilesim {

struct VerifyOptions {
    std::size_t target_bound = 4;
    std::optional<std::size_t> sim_bound;  // default: target_bound * max_cells_per_tile
    WeakDefinition weak_definition = WeakDefinition::Standard;
    unsigned threads = 0;
};

struct VerifyResult {
    std::size_t sim_bound = 0;
    std::size_t target_bound = 0;
    std::size_t sim_producibles = 0;
    std::size_t target_producibles = 0;
    RelationReport productions;
    RelationReport follows;
    RelationReport weakly;
    RelationReport strongly;

    bool all_pass() const { return productions.pass && follows.pass && weakly.pass && strongly.pass; }
    const RelationReport& by_name(const std::string& relation) const;
};

VerifyResult verify_simulation(const TAS& target, const CompiledSimulator& compiled, const VerifyOptions& options);

}  // namespace tilesim
