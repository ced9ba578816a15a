#include "tilesim/stability.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace tilesim {
namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Maximum-adjacency search phases. Stops early once a phase cut drops below `stop_below`.
long long stoer_wagner(std::vector<std::vector<long long>> w, long long stop_below) {
    std::size_t n = w.size();
    if (n <= 1) return LLONG_MAX;
    std::vector<std::size_t> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    long long best = LLONG_MAX;
    std::vector<long long> key(n);
    std::vector<char> added(n);
    while (alive.size() > 1) {
        std::fill(key.begin(), key.end(), 0);
        std::fill(added.begin(), added.end(), 0);
        std::size_t prev = alive[0];
        std::size_t last = alive[0];
        for (std::size_t step = 0; step < alive.size(); ++step) {
            std::size_t pick = n;
            for (std::size_t v : alive)
                if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
            added[pick] = 1;
            prev = last;
            last = pick;
            for (std::size_t v : alive)
                if (!added[v]) key[v] += w[pick][v];
        }
        best = std::min(best, key[last]);
        if (best < stop_below) return best;
        for (std::size_t v : alive) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    return best;
}

}  // namespace

long long min_cut_weight(const BindingGraph& graph) {
    std::size_t n = graph.vertices;
    if (n <= 1) return INT_MAX;
    UnionFind uf(n);
    std::size_t components = n;
    for (const auto& e : graph.edges)
        if (uf.unite(e.u, e.v)) --components;
    if (components > 1) return 0;
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (const auto& e : graph.edges) {
        w[e.u][e.v] += e.weight;
        w[e.v][e.u] += e.weight;
    }
    return stoer_wagner(std::move(w), LLONG_MIN);
}

bool is_tau_stable(const BindingGraph& graph, int tau) {
    std::size_t n = graph.vertices;
    if (n == 0) throw Error(ErrorKind::EmptyAssembly, "stability of an empty assembly");
    if (n == 1) return true;
    // Any cut separating the ends of a weight >= tau edge already carries tau,
    // so such edges can be contracted without changing the verdict.
    UnionFind heavy(n);
    for (const auto& e : graph.edges)
        if (e.weight >= tau) heavy.unite(e.u, e.v);
    std::vector<std::size_t> label(n, SIZE_MAX);
    std::size_t q = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t r = heavy.find(v);
        if (label[r] == SIZE_MAX) label[r] = q++;
        label[v] = label[r];
    }
    if (q == 1) return true;
    UnionFind light(q);
    std::size_t components = q;
    std::vector<long long> degree(q, 0);
    std::vector<std::vector<long long>> w(q, std::vector<long long>(q, 0));
    for (const auto& e : graph.edges) {
        std::size_t a = label[e.u];
        std::size_t b = label[e.v];
        if (a == b) continue;
        if (light.unite(a, b)) --components;
        w[a][b] += e.weight;
        w[b][a] += e.weight;
        degree[a] += e.weight;
        degree[b] += e.weight;
    }
    if (components > 1) return false;
    for (long long d : degree)
        if (d < tau) return false;
    return stoer_wagner(std::move(w), tau) >= tau;
}

bool is_tau_stable(const Assembly& cells, const TileSet& ts, int tau) {
    return is_tau_stable(binding_graph(cells, ts), tau);
}

}  // namespace tilesim
