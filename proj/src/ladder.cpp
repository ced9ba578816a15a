#include "tilesim/ladder.hpp"

#include "tilesim/combine.hpp"

#include <algorithm>

namespace tilesim {
namespace {

enum LadderTile : std::uint32_t { A0, A1, A2, A3, B0, B1, B2, B3 };

void subsets(int n, int k, int from, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int i = from; i < n; ++i) {
        current.push_back(i);
        subsets(n, k, i + 1, current, out);
        current.pop_back();
    }
}

Assembly half_ladder_cells(int height, LadderSide side, const std::vector<int>& rungs) {
    Assembly cells;
    bool left = side == LadderSide::Left;
    int column_x = left ? 0 : 2;
    for (int row = 0; row <= 2 * height - 2; ++row) {
        std::uint32_t tile = left ? (row % 2 == 0 ? A2 : A3) : (row % 2 == 0 ? B2 : B3);
        cells.push_back({column_x, row, tile});
    }
    for (int r : rungs) {
        if (left) {
            cells.push_back({1, 2 * r, A1});
            cells.push_back({2, 2 * r, A0});
        } else {
            cells.push_back({1, 2 * r, B1});
            cells.push_back({0, 2 * r, B0});
        }
    }
    return cells;
}

}  // namespace

LadderSystem build_ladder_system(int tau) {
    if (tau < 2) throw Error(ErrorKind::InvalidArgument, "ladder system needs tau >= 2");
    Glue none;
    auto strong = [tau](const char* label) { return Glue{label, tau}; };
    std::vector<TileType> tiles{
        make_tile("A0", none, Glue{"ab", 1}, none, strong("a10")),
        make_tile("A1", none, strong("a10"), none, strong("a21")),
        make_tile("A2", strong("a23"), strong("a21"), strong("a32"), none),
        make_tile("A3", strong("a32"), none, strong("a23"), none),
        make_tile("B0", none, strong("b10"), none, Glue{"ab", 1}),
        make_tile("B1", none, strong("b21"), none, strong("b10")),
        make_tile("B2", strong("b23"), none, strong("b32"), strong("b21")),
        make_tile("B3", strong("b32"), none, strong("b23"), none),
    };
    return LadderSystem{tau, TileSet(std::move(tiles))};
}

HalfLadder make_half_ladder(const LadderSystem& sys, int height, LadderSide side, const std::vector<int>& rungs) {
    if (height < sys.tau) throw Error(ErrorKind::HeightTooSmall, "height must be at least tau");
    if (static_cast<int>(rungs.size()) != sys.tau)
        throw Error(ErrorKind::InvalidArgument, "a half-ladder has exactly tau rungs");
    std::vector<int> sorted = rungs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
        sorted.back() >= height)
        throw Error(ErrorKind::InvalidArgument, "rung positions must be distinct and below the height");
    return HalfLadder{side, height, sorted, canonicalize(half_ladder_cells(height, side, sorted), sys.tiles)};
}

std::vector<HalfLadder> enumerate_half_ladders(const LadderSystem& sys, int height, LadderSide side) {
    if (height < sys.tau) throw Error(ErrorKind::HeightTooSmall, "height must be at least tau");
    std::vector<std::vector<int>> sets;
    std::vector<int> current;
    subsets(height, sys.tau, 0, current, sets);
    std::vector<HalfLadder> out;
    for (const auto& rungs : sets) out.push_back(make_half_ladder(sys, height, side, rungs));
    return out;
}

HalfLadder mirror(const HalfLadder& half, const LadderSystem& sys) {
    if (half.side != LadderSide::Left) throw Error(ErrorKind::InvalidArgument, "mirror expects a left half-ladder");
    return make_half_ladder(sys, half.height, LadderSide::Right, half.rungs);
}

std::vector<AssemblyStep> assembly_sequence(const HalfLadder& half, const LadderSystem& sys) {
    // Column bottom-up, then each rung from the column outwards.
    Assembly order = half_ladder_cells(half.height, half.side, half.rungs);
    std::vector<AssemblyStep> steps;
    Assembly grown{order.front()};
    for (std::size_t i = 1; i < order.size(); ++i) {
        AssemblyStep step;
        step.a = canonicalize(grown, sys.tiles);
        step.b = singleton(order[i].tile, sys.tiles);
        grown.push_back(order[i]);
        step.product = canonicalize(grown, sys.tiles);
        steps.push_back(std::move(step));
    }
    return steps;
}

bool verify_sequence(const std::vector<AssemblyStep>& steps, const TileSet& ts, int tau) {
    for (const auto& step : steps) {
        auto products = combine(step.a, step.b, ts, tau);
        if (std::find(products.begin(), products.end(), step.product) == products.end()) return false;
    }
    return true;
}

BindingMatrix binding_strength_matrix(const LadderSystem& sys, int height) {
    BindingMatrix m;
    m.lefts = enumerate_half_ladders(sys, height, LadderSide::Left);
    m.rights = enumerate_half_ladders(sys, height, LadderSide::Right);
    const TileSet& ts = sys.tiles;
    std::size_t n = m.lefts.size();
    m.aligned.assign(n, std::vector<int>(m.rights.size(), 0));
    m.best = m.aligned;
    m.combines.assign(n, std::vector<char>(m.rights.size(), 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Supertile& l = m.lefts[i].supertile;
        auto fl = exposed_faces(l, ts);
        for (std::size_t j = 0; j < m.rights.size(); ++j) {
            const Supertile& r = m.rights[j].supertile;
            auto fr = exposed_faces(r, ts);
            // Both canonical forms start the column at y = 0, so the aligned placement is (3, 0).
            for (const Placement& p : candidate_placements(l, fl, r, fr, 1)) {
                m.best[i][j] = std::max(m.best[i][j], p.interface_strength);
                if (p.dx == kAlignedOffset && p.dy == 0) m.aligned[i][j] = p.interface_strength;
            }
            m.combines[i][j] = !combine(l, fl, r, fr, ts, sys.tau).empty();
        }
    }
    return m;
}

}  // namespace tilesim
