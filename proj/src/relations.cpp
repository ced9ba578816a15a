#include "tilesim/relations.hpp"

#include "tilesim/parallel.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace tilesim {
namespace {

int floor_div(int a, int m) { return a >= 0 ? a / m : -((-a + m - 1) / m); }

}  // namespace

const char* decode_status_name(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::Ok: return "Ok";
        case DecodeStatus::NoValidAlignment: return "NoValidAlignment";
        case DecodeStatus::AmbiguousAlignment: return "AmbiguousAlignment";
        case DecodeStatus::Corrupt: return "CorruptMacrotile";
    }
    return "Unknown";
}

BlockRepresentation lookup_representation(int m, std::map<std::vector<Cell>, std::uint32_t> table) {
    BlockRepresentation rep;
    rep.m = m;
    rep.decode = [table = std::move(table)](const std::vector<Cell>& block) -> std::optional<std::uint32_t> {
        auto it = table.find(block);
        if (it == table.end()) return std::nullopt;
        return it->second;
    };
    return rep;
}

DecodedImage decode_at(const Supertile& s, const BlockRepresentation& rep, int offset_x, int offset_y) {
    const int m = rep.m;
    struct Local {
        int bx, by;
        Cell cell;
        bool operator<(const Local& o) const {
            return std::tie(bx, by, cell) < std::tie(o.bx, o.by, o.cell);
        }
    };
    std::vector<Local> placed;
    placed.reserve(s.size());
    for (const Cell& c : s.cells) {
        int x = c.x + offset_x;
        int y = c.y + offset_y;
        int bx = floor_div(x, m);
        int by = floor_div(y, m);
        placed.push_back({bx, by, Cell{x - bx * m, y - by * m, c.tile}});
    }
    std::sort(placed.begin(), placed.end());
    DecodedImage img;
    img.offset_x = offset_x;
    img.offset_y = offset_y;
    std::vector<Cell> block;
    for (std::size_t i = 0; i < placed.size();) {
        std::size_t j = i;
        block.clear();
        while (j < placed.size() && placed[j].bx == placed[i].bx && placed[j].by == placed[i].by)
            block.push_back(placed[j++].cell);
        img.nonempty_blocks.emplace_back(placed[i].bx, placed[i].by);
        if (auto t = rep.decode(block)) img.image.push_back({placed[i].bx, placed[i].by, *t});
        i = j;
    }
    img.clean = is_clean(img);
    return img;
}

bool is_clean(const DecodedImage& img) {
    if (img.nonempty_blocks.size() <= 1) return true;
    std::set<std::pair<int, int>> domain;
    for (const Cell& c : img.image) domain.insert({c.x, c.y});
    for (auto [bx, by] : img.nonempty_blocks) {
        bool near = domain.count({bx, by}) > 0;
        for (Side s : kSides) near = near || domain.count({bx + kDx[s], by + kDy[s]}) > 0;
        if (!near) return false;
    }
    return true;
}

DecodeResult decode_supertile(const Supertile& s, const BlockRepresentation& rep, const TileSet& target_tiles) {
    std::vector<std::pair<int, int>> offsets;
    if (rep.candidate_offsets) {
        offsets = rep.candidate_offsets(s);
    } else {
        for (int ox = 0; ox < rep.m; ++ox)
            for (int oy = 0; oy < rep.m; ++oy) offsets.emplace_back(ox, oy);
    }
    DecodeResult result;
    std::vector<std::pair<Supertile, DecodedImage>> found;
    for (auto [ox, oy] : offsets) {
        DecodedImage img;
        try {
            img = decode_at(s, rep, ox, oy);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CorruptMacrotile) throw;
            result.status = DecodeStatus::Corrupt;
            result.message = e.what();
            result.image.offset_x = ox;
            result.image.offset_y = oy;
            return result;
        }
        if (img.image.empty()) continue;
        found.emplace_back(canonicalize(img.image, target_tiles), std::move(img));
    }
    if (found.empty()) {
        result.status = DecodeStatus::NoValidAlignment;
        result.message = "no offset yields a non-empty image";
        return result;
    }
    for (const auto& [image, img] : found) {
        if (!(image == found.front().first)) {
            result.status = DecodeStatus::AmbiguousAlignment;
            result.message = "offsets (" + std::to_string(found.front().second.offset_x) + "," +
                             std::to_string(found.front().second.offset_y) + ") and (" +
                             std::to_string(img.offset_x) + "," + std::to_string(img.offset_y) +
                             ") decode to different images";
            return result;
        }
    }
    // Same translation class throughout; prefer an offset under which the image is clean.
    std::size_t pick = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i].second.clean) {
            pick = i;
            break;
        }
    }
    result.status = DecodeStatus::Ok;
    result.target = std::move(found[pick].first);
    result.image = std::move(found[pick].second);
    return result;
}

SimulationContext::SimulationContext(const ProducibleSet& sim, const ProducibleSet& target,
                                     const BlockRepresentation& rep)
    : sim_(sim), target_(target) {
    std::size_t n = sim.supertiles.size();
    decoded_.resize(n);
    parallel_for(n, 0, [&](std::size_t i) {
        decoded_[i] = decode_supertile(sim.supertiles[i], rep, target.tas.tiles);
    });
    image_.assign(n, std::nullopt);
    over_bound_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (decoded_[i].status != DecodeStatus::Ok) continue;
        if (decoded_[i].target.size() > target.size_bound) {
            over_bound_[i] = 1;
            continue;
        }
        image_[i] = target.index_of(decoded_[i].target);
    }
    children_.assign(n, {});
    for (const ProductionEdge& e : sim.edges) {
        children_[e.parent_a].push_back(e.child);
        if (e.parent_b != e.parent_a) children_[e.parent_b].push_back(e.child);
    }
    for (auto& list : children_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (const ProductionEdge& e : target.edges) {
        target_steps_.insert({e.parent_a, e.child});
        target_steps_.insert({e.parent_b, e.child});
    }
}

std::vector<char> SimulationContext::reachable(std::size_t start) const {
    std::vector<char> seen(sim_.supertiles.size(), 0);
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t c : children_[v]) {
            if (!seen[c]) {
                seen[c] = 1;
                queue.push_back(c);
            }
        }
    }
    return seen;
}

bool SimulationContext::target_step(std::size_t from, std::size_t to) const {
    return from == to || target_steps_.count({from, to}) > 0;
}

namespace {

RelationReport new_report(const SimulationContext& ctx, const char* relation) {
    RelationReport r;
    r.relation = relation;
    r.sim_bound = ctx.sim().size_bound;
    r.target_bound = ctx.target().size_bound;
    r.sim_overflow = ctx.sim().overflow;
    r.target_overflow = ctx.target().overflow;
    return r;
}

std::uint64_t sim_fp(const SimulationContext& ctx, std::size_t i) { return ctx.sim().supertiles[i].fingerprint; }
std::uint64_t target_fp(const SimulationContext& ctx, std::size_t i) {
    return ctx.target().supertiles[i].fingerprint;
}

}  // namespace

RelationReport check_equivalent_productions(const SimulationContext& ctx) {
    RelationReport r = new_report(ctx, "productions");
    std::vector<char> covered(ctx.target().supertiles.size(), 0);
    for (std::size_t i = 0; i < ctx.sim().supertiles.size(); ++i) {
        ++r.checked;
        const DecodeResult& d = ctx.decoded(i);
        switch (d.status) {
            case DecodeStatus::NoValidAlignment: ++r.unmapped; continue;
            case DecodeStatus::AmbiguousAlignment: r.add({"ambiguous-alignment", d.message, {sim_fp(ctx, i)}}); continue;
            case DecodeStatus::Corrupt: r.add({"corrupt-macrotile", d.message, {sim_fp(ctx, i)}}); continue;
            case DecodeStatus::Ok: break;
        }
        if (!d.image.clean) r.add({"unclean", "non-empty block diagonal to the image domain", {sim_fp(ctx, i)}});
        if (ctx.over_bound(i)) {
            ++r.boundary_cases;
            continue;
        }
        if (auto t = ctx.image(i)) {
            covered[*t] = 1;
        } else {
            r.add({"image-not-producible", "image " + fingerprint_hex(d.target.fingerprint) + " is not producible in the target",
                   {sim_fp(ctx, i)}});
        }
    }
    for (std::size_t t = 0; t < covered.size(); ++t) {
        if (covered[t]) {
            ++r.images;
        } else {
            r.add({"missing-image", "no simulator supertile represents this target supertile", {target_fp(ctx, t)}});
        }
    }
    return r;
}

RelationReport check_follows(const SimulationContext& ctx) {
    RelationReport r = new_report(ctx, "follows");
    for (const ProductionEdge& e : ctx.sim().edges) {
        std::vector<std::size_t> parents{e.parent_a};
        if (e.parent_b != e.parent_a) parents.push_back(e.parent_b);
        for (std::size_t p : parents) {
            const DecodeResult& dp = ctx.decoded(p);
            const DecodeResult& dc = ctx.decoded(e.child);
            if (dp.status != DecodeStatus::Ok || dc.status != DecodeStatus::Ok) continue;
            if (ctx.over_bound(p) || ctx.over_bound(e.child)) {
                ++r.boundary_cases;
                continue;
            }
            ++r.checked;
            auto ip = ctx.image(p);
            auto ic = ctx.image(e.child);
            if (!ip || !ic) {
                r.add({"image-not-producible", "an endpoint image is not producible in the target",
                       {sim_fp(ctx, p), sim_fp(ctx, e.child)}});
                continue;
            }
            if (!ctx.target_step(*ip, *ic))
                r.add({"no-target-step",
                       "image " + fingerprint_hex(target_fp(ctx, *ip)) + " does not reach " +
                           fingerprint_hex(target_fp(ctx, *ic)) + " in at most one step",
                       {sim_fp(ctx, p), sim_fp(ctx, e.child)}});
        }
    }
    return r;
}

RelationReport check_weakly_models(const SimulationContext& ctx, WeakDefinition def) {
    RelationReport r = new_report(ctx, def == WeakDefinition::Standard ? "weak" : "weak-literal");
    const std::size_t n = ctx.sim().supertiles.size();
    std::unordered_map<std::size_t, std::vector<char>> reach_cache;
    auto reach = [&](std::size_t i) -> const std::vector<char>& {
        auto it = reach_cache.find(i);
        if (it == reach_cache.end()) it = reach_cache.emplace(i, ctx.reachable(i)).first;
        return it->second;
    };
    std::set<std::pair<std::size_t, std::size_t>> steps;
    for (const ProductionEdge& e : ctx.target().edges) {
        steps.insert({e.parent_a, e.child});
        steps.insert({e.parent_b, e.child});
    }
    for (auto [alpha, beta] : steps) {
        std::size_t holder = def == WeakDefinition::Standard ? alpha : beta;
        for (std::size_t start = 0; start < n; ++start) {
            if (ctx.image(start) != alpha) continue;
            ++r.checked;
            const auto& seen = reach(start);
            bool found = false;
            for (std::size_t mid = 0; mid < n && !found; ++mid) {
                if (!seen[mid] || ctx.image(mid) != holder) continue;
                for (std::size_t c : ctx.children(mid)) {
                    if (ctx.image(c) == beta) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                r.add({"no-simulator-step",
                       "representative cannot grow into a supertile that steps to the image of " +
                           fingerprint_hex(target_fp(ctx, beta)),
                       {sim_fp(ctx, start), target_fp(ctx, alpha), target_fp(ctx, beta)}});
        }
    }
    return r;
}

RelationReport check_strongly_models(const SimulationContext& ctx) {
    RelationReport r = new_report(ctx, "strong");
    const std::size_t n = ctx.sim().supertiles.size();
    std::unordered_map<std::size_t, std::vector<char>> reach_cache;
    auto reach = [&](std::size_t i) -> const std::vector<char>& {
        auto it = reach_cache.find(i);
        if (it == reach_cache.end()) it = reach_cache.emplace(i, ctx.reachable(i)).first;
        return it->second;
    };
    std::vector<std::vector<std::size_t>> by_image(ctx.target().supertiles.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto t = ctx.image(i)) by_image[*t].push_back(i);
    for (const ProductionEdge& te : ctx.target().edges) {
        std::size_t a = te.parent_a, b = te.parent_b, c = te.child;
        // Simulator combinations realizing this target combination, oriented (maps to a, maps to b).
        std::vector<std::pair<std::size_t, std::size_t>> good;
        for (const ProductionEdge& se : ctx.sim().edges) {
            if (ctx.image(se.child) != c) continue;
            if (ctx.image(se.parent_a) == a && ctx.image(se.parent_b) == b) good.emplace_back(se.parent_a, se.parent_b);
            if (ctx.image(se.parent_b) == a && ctx.image(se.parent_a) == b) good.emplace_back(se.parent_b, se.parent_a);
        }
        for (std::size_t ap : by_image[a]) {
            for (std::size_t bp : by_image[b]) {
                ++r.checked;
                const auto& ra = reach(ap);
                const auto& rb = reach(bp);
                bool ok = std::any_of(good.begin(), good.end(),
                                      [&](const auto& pq) { return ra[pq.first] && rb[pq.second]; });
                if (!ok)
                    r.add({"no-simulator-combination",
                           "representatives cannot grow into a pair combining to the image of " +
                               fingerprint_hex(target_fp(ctx, c)),
                           {sim_fp(ctx, ap), sim_fp(ctx, bp), target_fp(ctx, c)}});
            }
        }
    }
    return r;
}

}  // namespace tilesim
