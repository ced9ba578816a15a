// Bounded producible-set exploration, terminality, single-step reachability.
#pragma once

#include "tilesim/model.hpp"

#include <map>

namespace tilesim {

struct ProductionEdge {
    std::size_t parent_a = 0;  // parent_a <= parent_b
    std::size_t parent_b = 0;
    std::size_t child = 0;
    auto operator<=>(const ProductionEdge&) const = default;
};

struct ExploreOptions {
    std::optional<std::size_t> step_bound;   // rounds of pairwise combination
    std::optional<std::uint64_t> shuffle_seed;  // permutes pair processing order
    unsigned threads = 0;                    // 0 = hardware concurrency
};

struct ProducibleSet {
    TAS tas;
    std::size_t size_bound = 0;
    std::optional<std::size_t> step_bound;
    std::vector<Supertile> supertiles;        // sorted by (fingerprint, cells)
    std::vector<ProductionEdge> edges;        // sorted, unique
    std::size_t overflow = 0;                 // attachment events (pair, offset) above the bound
    std::size_t rounds = 0;
    bool step_limited = false;                // stopped by step_bound with work left

    std::optional<std::size_t> index_of(const Supertile& s) const;
    std::optional<std::size_t> index_of_fingerprint(std::uint64_t fp) const;
    std::size_t require(const Supertile& s) const;  // throws NotProducible
};

ProducibleSet explore(const TAS& tas, std::size_t size_bound, const ExploreOptions& options = {});

// Bound-relative: true iff s combines with no member of p.
bool is_terminal(const Supertile& s, const ProducibleSet& p);

struct StepReachability {
    bool one_step = false;       // a ->1 b
    bool at_most_one = false;    // a ->(<=1) b
};

StepReachability single_step_reachable(const Supertile& a, const Supertile& b, const ProducibleSet& p);

// Finite-count state for replaying assembly sequences.
class StateMultiset {
public:
    StateMultiset() = default;
    explicit StateMultiset(const TAS& tas);

    Count count(const Supertile& s) const;
    const std::map<std::uint64_t, std::vector<std::pair<Supertile, Count>>>& entries() const { return counts_; }

    // Picks a and b, attaches them into `product`. Throws InvalidArgument if the step is illegal.
    void apply(const Supertile& a, const Supertile& b, const Supertile& product, const TileSet& ts, int tau);

private:
    Count& slot(const Supertile& s);
    void take(const Supertile& s);
    std::map<std::uint64_t, std::vector<std::pair<Supertile, Count>>> counts_;
};

}  // namespace tilesim
