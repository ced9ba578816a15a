#include "tilesim/combine.hpp"

#include "tilesim/stability.hpp"

#include <algorithm>
#include <tuple>

namespace tilesim {

std::optional<std::uint32_t> tile_at(const Supertile& s, int x, int y) {
    auto it = std::lower_bound(s.cells.begin(), s.cells.end(), Cell{x, y, 0});
    if (it != s.cells.end() && it->x == x && it->y == y) return it->tile;
    return std::nullopt;
}

bool occupies(const Supertile& s, int x, int y) { return tile_at(s, x, y).has_value(); }

std::vector<ExposedFace> exposed_faces(const Supertile& s, const TileSet& ts) {
    std::vector<ExposedFace> faces;
    for (const Cell& c : s.cells) {
        for (Side side : kSides) {
            int code = ts.code(c.tile, side);
            if (code < 0) continue;
            if (occupies(s, c.x + kDx[side], c.y + kDy[side])) continue;
            faces.push_back({c.x, c.y, side, code, ts.strength(c.tile, side)});
        }
    }
    std::sort(faces.begin(), faces.end(), [](const ExposedFace& p, const ExposedFace& q) {
        return std::tie(p.side, p.code, p.x, p.y) < std::tie(q.side, q.code, q.x, q.y);
    });
    return faces;
}

std::vector<Placement> candidate_placements(const Supertile& a, const std::vector<ExposedFace>& fa,
                                            const Supertile& b, const std::vector<ExposedFace>& fb,
                                            int min_strength) {
    // fb is sorted by (side, code); collect per-offset contributions and merge.
    std::vector<Placement> contributions;
    auto key_less = [](const ExposedFace& p, std::pair<int, int> key) {
        return std::make_pair(static_cast<int>(p.side), p.code) < key;
    };
    for (const ExposedFace& f : fa) {
        std::pair<int, int> key{static_cast<int>(opposite(f.side)), f.code};
        auto it = std::lower_bound(fb.begin(), fb.end(), key, key_less);
        int tx = f.x + kDx[f.side];
        int ty = f.y + kDy[f.side];
        for (; it != fb.end() && it->side == key.first && it->code == key.second; ++it)
            contributions.push_back({tx - it->x, ty - it->y, f.strength});
    }
    std::sort(contributions.begin(), contributions.end(),
              [](const Placement& p, const Placement& q) { return std::tie(p.dx, p.dy) < std::tie(q.dx, q.dy); });
    std::vector<Placement> out;
    for (std::size_t i = 0; i < contributions.size();) {
        Placement merged = contributions[i];
        std::size_t j = i + 1;
        for (; j < contributions.size() && contributions[j].dx == merged.dx && contributions[j].dy == merged.dy; ++j)
            merged.interface_strength += contributions[j].interface_strength;
        i = j;
        if (merged.interface_strength < min_strength) continue;
        bool overlap = false;
        for (const Cell& c : b.cells) {
            if (occupies(a, c.x + merged.dx, c.y + merged.dy)) {
                overlap = true;
                break;
            }
        }
        if (!overlap) out.push_back(merged);
    }
    return out;
}

std::vector<Supertile> combine(const Supertile& a, const std::vector<ExposedFace>& fa, const Supertile& b,
                               const std::vector<ExposedFace>& fb, const TileSet& ts, int tau) {
    std::vector<Supertile> out;
    // The a|b cut is one cut of the union, so offsets below tau there cannot be stable.
    for (const Placement& p : candidate_placements(a, fa, b, fb, tau)) {
        Assembly shifted = b.cells;
        for (Cell& c : shifted) c.x += p.dx, c.y += p.dy;
        Assembly cells(a.size() + b.size());
        std::merge(a.cells.begin(), a.cells.end(), shifted.begin(), shifted.end(), cells.begin());
        if (!is_tau_stable(cells, ts, tau)) continue;
        Supertile result = canonicalize(std::move(cells), ts);
        if (std::find(out.begin(), out.end(), result) == out.end()) out.push_back(std::move(result));
    }
    std::sort(out.begin(), out.end(), [](const Supertile& x, const Supertile& y) {
        return x.fingerprint != y.fingerprint ? x.fingerprint < y.fingerprint : x.cells < y.cells;
    });
    return out;
}

std::vector<Supertile> combine(const Supertile& a, const Supertile& b, const TileSet& ts, int tau) {
    return combine(a, exposed_faces(a, ts), b, exposed_faces(b, ts), ts, tau);
}

int max_interface_strength(const Supertile& a, const Supertile& b, const TileSet& ts) {
    int best = 0;
    for (const Placement& p : candidate_placements(a, exposed_faces(a, ts), b, exposed_faces(b, ts), 1))
        best = std::max(best, p.interface_strength);
    return best;
}

}  // namespace tilesim
