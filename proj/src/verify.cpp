#include "tilesim/verify.hpp"

namespace tilesim {

const RelationReport& VerifyResult::by_name(const std::string& relation) const {
    if (relation == "productions") return productions;
    if (relation == "follows") return follows;
    if (relation == "weakly") return weakly;
    if (relation == "strongly") return strongly;
    throw Error(ErrorKind::InvalidArgument, "unknown relation '" + relation + "'");
}

VerifyResult verify_simulation(const TAS& target, const CompiledSimulator& compiled, const VerifyOptions& options) {
    VerifyResult out;
    out.target_bound = options.target_bound;
    out.sim_bound = options.sim_bound.value_or(options.target_bound * std::max<std::size_t>(1, compiled.max_cells_per_tile));
    ExploreOptions explore_options;
    explore_options.threads = options.threads;
    ProducibleSet target_set = explore(target, out.target_bound, explore_options);
    ProducibleSet sim_set = explore(compiled.simulator, out.sim_bound, explore_options);
    out.sim_producibles = sim_set.supertiles.size();
    out.target_producibles = target_set.supertiles.size();
    SimulationContext ctx(sim_set, target_set, compiled.rep);
    out.productions = check_equivalent_productions(ctx);
    out.follows = check_follows(ctx);
    out.weakly = check_weakly_models(ctx, options.weak_definition);
    out.strongly = check_strongly_models(ctx);
    return out;
}

}  // namespace tilesim
