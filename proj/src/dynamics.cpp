#include "tilesim/dynamics.hpp"

#include "tilesim/combine.hpp"
#include "tilesim/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace tilesim {
namespace {

bool supertile_less(const Supertile& x, const Supertile& y) {
    return x.fingerprint != y.fingerprint ? x.fingerprint < y.fingerprint : x.cells < y.cells;
}

class Registry {
public:
    std::vector<Supertile> items;
    std::vector<std::vector<ExposedFace>> faces;

    std::pair<std::size_t, bool> insert(Supertile s, const TileSet& ts) {
        auto& bucket = by_fp_[s.fingerprint];
        for (std::size_t i : bucket)
            if (items[i].cells == s.cells) return {i, false};
        bucket.push_back(items.size());
        faces.push_back(exposed_faces(s, ts));
        items.push_back(std::move(s));
        return {items.size() - 1, true};
    }

private:
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_fp_;
};

}  // namespace

std::optional<std::size_t> ProducibleSet::index_of(const Supertile& s) const {
    auto it = std::lower_bound(supertiles.begin(), supertiles.end(), s, supertile_less);
    if (it != supertiles.end() && *it == s) return static_cast<std::size_t>(it - supertiles.begin());
    return std::nullopt;
}

std::optional<std::size_t> ProducibleSet::index_of_fingerprint(std::uint64_t fp) const {
    auto it = std::lower_bound(supertiles.begin(), supertiles.end(), fp,
                               [](const Supertile& s, std::uint64_t v) { return s.fingerprint < v; });
    if (it != supertiles.end() && it->fingerprint == fp) return static_cast<std::size_t>(it - supertiles.begin());
    return std::nullopt;
}

std::size_t ProducibleSet::require(const Supertile& s) const {
    auto i = index_of(s);
    if (!i) throw Error(ErrorKind::NotProducible, "supertile " + fingerprint_hex(s.fingerprint) + " is not in the producible set");
    return *i;
}

ProducibleSet explore(const TAS& tas, std::size_t size_bound, const ExploreOptions& options) {
    if (size_bound < 1) throw Error(ErrorKind::BoundTooSmall, "size bound must be at least 1");
    for (const auto& [s, count] : tas.initial)
        if (s.size() > size_bound)
            throw Error(ErrorKind::BoundTooSmall, "size bound " + std::to_string(size_bound) +
                                                      " is below initial supertile size " + std::to_string(s.size()));
    const TileSet& ts = tas.tiles;
    const int tau = tas.temperature;
    Registry reg;
    for (const auto& [s, count] : tas.initial) reg.insert(s, ts);

    std::set<ProductionEdge> edges;
    std::size_t overflow = 0;
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    std::size_t start = 0;
    std::size_t rounds = 0;
    bool limited = false;
    while (start < reg.items.size()) {
        if (options.step_bound && rounds >= *options.step_bound) {
            limited = true;
            break;
        }
        std::size_t end = reg.items.size();
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = start; i < end; ++i)
            for (std::size_t j = 0; j <= i; ++j) pairs.emplace_back(j, i);
        if (options.shuffle_seed) std::shuffle(pairs.begin(), pairs.end(), rng);

        std::vector<std::vector<Supertile>> products(pairs.size());
        std::vector<std::size_t> over(pairs.size(), 0);
        parallel_for(pairs.size(), options.threads, [&](std::size_t p) {
            auto [a, b] = pairs[p];
            if (reg.items[a].size() + reg.items[b].size() > size_bound) {
                // Not expanded; only the attachment events are counted.
                over[p] = candidate_placements(reg.items[a], reg.faces[a], reg.items[b], reg.faces[b], tau).size();
                return;
            }
            products[p] = combine(reg.items[a], reg.faces[a], reg.items[b], reg.faces[b], ts, tau);
        });
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            overflow += over[p];
            for (Supertile& child : products[p]) {
                std::size_t c = reg.insert(std::move(child), ts).first;
                edges.insert({pairs[p].first, pairs[p].second, c});
            }
        }
        start = end;
        ++rounds;
    }

    ProducibleSet out;
    out.tas = tas;
    out.size_bound = size_bound;
    out.step_bound = options.step_bound;
    out.rounds = rounds;
    out.step_limited = limited;
    std::vector<std::size_t> order(reg.items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return supertile_less(reg.items[x], reg.items[y]); });
    std::vector<std::size_t> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    out.supertiles.reserve(order.size());
    for (std::size_t i : order) out.supertiles.push_back(std::move(reg.items[i]));
    std::set<ProductionEdge> remapped;
    for (const ProductionEdge& e : edges) {
        std::size_t a = rank[e.parent_a];
        std::size_t b = rank[e.parent_b];
        remapped.insert({std::min(a, b), std::max(a, b), rank[e.child]});
    }
    out.edges.assign(remapped.begin(), remapped.end());
    out.overflow = overflow;
    return out;
}

bool is_terminal(const Supertile& s, const ProducibleSet& p) {
    p.require(s);
    const TileSet& ts = p.tas.tiles;
    auto fs = exposed_faces(s, ts);
    for (const Supertile& other : p.supertiles)
        if (!combine(s, fs, other, exposed_faces(other, ts), ts, p.tas.temperature).empty()) return false;
    return true;
}

StepReachability single_step_reachable(const Supertile& a, const Supertile& b, const ProducibleSet& p) {
    std::size_t ia = p.require(a);
    std::size_t ib = p.require(b);
    StepReachability r;
    for (const ProductionEdge& e : p.edges) {
        if (e.child == ib && (e.parent_a == ia || e.parent_b == ia)) {
            r.one_step = true;
            break;
        }
    }
    r.at_most_one = r.one_step || ia == ib;
    return r;
}

StateMultiset::StateMultiset(const TAS& tas) {
    for (const auto& [s, count] : tas.initial) {
        Count& c = slot(s);
        if (count.infinite || c.infinite) c = Count::inf();
        else c.value += count.value;
    }
}

Count& StateMultiset::slot(const Supertile& s) {
    auto& bucket = counts_[s.fingerprint];
    for (auto& [t, c] : bucket)
        if (t.cells == s.cells) return c;
    bucket.emplace_back(s, Count::finite(0));
    return bucket.back().second;
}

Count StateMultiset::count(const Supertile& s) const {
    auto it = counts_.find(s.fingerprint);
    if (it == counts_.end()) return Count::finite(0);
    for (const auto& [t, c] : it->second)
        if (t.cells == s.cells) return c;
    return Count::finite(0);
}

void StateMultiset::take(const Supertile& s) {
    Count& c = slot(s);
    if (c.infinite) return;
    if (c.value == 0) throw Error(ErrorKind::InvalidArgument, "supertile " + fingerprint_hex(s.fingerprint) + " is not available");
    --c.value;
}

void StateMultiset::apply(const Supertile& a, const Supertile& b, const Supertile& product, const TileSet& ts, int tau) {
    auto options = combine(a, b, ts, tau);
    if (std::find(options.begin(), options.end(), product) == options.end())
        throw Error(ErrorKind::InvalidArgument, "product is not in the combination set of the reactants");
    Count before_a = count(a);
    take(a);
    try {
        take(b);
    } catch (...) {
        slot(a) = before_a;
        throw;
    }
    Count& c = slot(product);
    if (!c.infinite) ++c.value;
}

}  // namespace tilesim
