// Global minimum cut of the binding graph and the tau-stability predicate.
#pragma once

#include "tilesim/model.hpp"

namespace tilesim {

// Stoer-Wagner minimum cut weight; 0 for a disconnected graph, INT_MAX for a single vertex.
long long min_cut_weight(const BindingGraph& graph);

// Connected and every cut carries at least tau. Singletons are stable.
bool is_tau_stable(const Assembly& cells, const TileSet& ts, int tau);
bool is_tau_stable(const BindingGraph& graph, int tau);

}  // namespace tilesim
