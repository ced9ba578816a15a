#include "tilesim/enumeration.hpp"

#include <map>

namespace tilesim {

TileSet get_nth_tas(std::uint64_t n, int tau, std::uint64_t power_set_cap) {
    if (tau < 1) throw Error(ErrorKind::InvalidArgument, "tau must be at least 1");
    std::uint64_t number = 0;
    for (int glues = 1;; ++glues) {
        const std::uint64_t base = static_cast<std::uint64_t>(tau) + 1;
        std::uint64_t all_ones = 0, last = 1;
        for (int i = 0; i < glues; ++i) {
            all_ones = all_ones * base + 1;
            last *= base;
        }
        --last;
        const std::uint64_t tile_count = static_cast<std::uint64_t>(glues + 1) * (glues + 1) * (glues + 1) * (glues + 1) - 1;
        const std::uint64_t subsets = tile_count >= 63 ? 0 : std::uint64_t{1} << tile_count;
        for (std::uint64_t config = all_ones; config <= last; ++config) {
            if (subsets == 0 || subsets > power_set_cap)
                throw Error(ErrorKind::FeasibilityCapExceeded,
                            "index " + std::to_string(n) + " needs the power set of " + std::to_string(tile_count) +
                                " tiles");
            if (n - number >= subsets) {
                number += subsets;
                continue;
            }
            // strengths[i] = a_{i+1}, the (i+1)-th digit from the least significant end.
            std::vector<int> strengths;
            for (std::uint64_t v = config; static_cast<int>(strengths.size()) < glues; v /= base)
                strengths.push_back(static_cast<int>(v % base));
            auto side_glue = [&](int digit) {
                if (digit == 0) return Glue{};
                return Glue{std::to_string(digit - 1), strengths[digit - 1]};
            };
            const std::uint64_t chosen = n - number;
            std::vector<TileType> tiles;
            for (std::uint64_t code = 1; code <= tile_count; ++code) {
                if (!((chosen >> (code - 1)) & 1)) continue;
                int digits[4];
                std::uint64_t v = code;
                for (int& d : digits) {
                    d = static_cast<int>(v % (glues + 1));
                    v /= glues + 1;
                }
                // (s3, s2, s1, s0) -> (N, E, S, W)
                tiles.push_back(make_tile("t" + std::to_string(code), side_glue(digits[3]), side_glue(digits[2]),
                                          side_glue(digits[1]), side_glue(digits[0])));
            }
            return TileSet(std::move(tiles));
        }
    }
}

TileSet canonicalize_tileset(const TileSet& ts) {
    std::map<std::string, std::string> relabel;
    std::vector<TileType> tiles = ts.tiles();
    for (TileType& t : tiles) {
        for (Side s : kSides) {
            Glue& g = t.glues[s];
            if (g.is_null()) continue;
            auto [it, fresh] = relabel.emplace(g.label, std::to_string(relabel.size()));
            g.label = it->second;
        }
    }
    return TileSet(std::move(tiles));
}

bool functionally_equivalent(const TileSet& a, const TileSet& b, std::size_t cap) {
    const std::size_t n = a.size();
    if (n != b.size()) return false;
    if (n > cap) throw Error(ErrorKind::CapExceeded, "bijection search limited to " + std::to_string(cap) + " tiles");
    std::vector<std::uint32_t> image(n);
    std::vector<char> taken(n, 0);
    auto consistent = [&](std::uint32_t i) {
        for (std::uint32_t j = 0; j <= i; ++j)
            for (Side s : kSides)
                if (a.interaction(i, s, j) != b.interaction(image[i], s, image[j]) ||
                    a.interaction(j, s, i) != b.interaction(image[j], s, image[i]))
                    return false;
        return true;
    };
    auto search = [&](auto&& self, std::uint32_t i) -> bool {
        if (i == n) return true;
        for (std::uint32_t c = 0; c < n; ++c) {
            if (taken[c]) continue;
            image[i] = c;
            taken[c] = 1;
            if (consistent(i) && self(self, i + 1)) return true;
            taken[c] = 0;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace tilesim
