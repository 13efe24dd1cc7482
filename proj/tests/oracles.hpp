// Brute-force oracles for cross-checking the optimized library routines.
// Everything here favors obviousness over speed and is only used at tiny n.
#ifndef MYCLAB_TESTS_ORACLES_HPP
#define MYCLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "myclab/graph.hpp"
#include "myclab/l21.hpp"

namespace oracles {

using myclab::Graph;

// Distances by boolean matrix powers: d(u,v) = least k with a length-<=k walk.
inline myclab::DistanceTable distance_oracle(const Graph& g) {
    int n = g.order();
    myclab::DistanceTable table;
    table.n = n;
    table.d.assign(static_cast<size_t>(n) * n, myclab::DistanceTable::unreachable);
    std::vector<char> reach(static_cast<size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v) {
        reach[static_cast<size_t>(v) * n + v] = 1;
        table.d[static_cast<size_t>(v) * n + v] = 0;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<char> next = reach;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                if (next[static_cast<size_t>(u) * n + w]) continue;
                for (int mid = 0; mid < n; ++mid)
                    if (reach[static_cast<size_t>(u) * n + mid] && g.adjacent(mid, w)) {
                        next[static_cast<size_t>(u) * n + w] = 1;
                        break;
                    }
            }
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                if (next[static_cast<size_t>(u) * n + w] && !reach[static_cast<size_t>(u) * n + w])
                    table.d[static_cast<size_t>(u) * n + w] = k;
        reach = std::move(next);
    }
    return table;
}

// Exhaustive L(2,1) feasibility by enumerating label vectors with prefix checks.
inline bool feasible_oracle(const Graph& g, int k) {
    int n = g.order();
    myclab::DistanceTable d = distance_oracle(g);
    std::vector<int> f(n, -1);
    auto ok = [&](int v) {
        for (int u = 0; u < v; ++u) {
            int gap = std::abs(f[u] - f[v]);
            if (d.at(u, v) == 1 && gap < 2) return false;
            if (d.at(u, v) == 2 && gap < 1) return false;
        }
        return true;
    };
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int l = 0; l <= k; ++l) {
            f[v] = l;
            if (ok(v) && rec(v + 1)) return true;
        }
        f[v] = -1;
        return false;
    };
    return rec(0);
}

inline int lambda_oracle(const Graph& g) {
    for (int k = 0;; ++k)
        if (feasible_oracle(g, k)) return k;
}

// nu2 by direct edge-weight assignment: w(e) in {0,1,2}, vertex load <= 2,
// count vertices with load exactly 2. Only sane for n <= 5.
inline int nu2_weight_oracle(const Graph& g) {
    auto edges = g.edges();
    int n = g.order();
    std::vector<int> load(n, 0);
    int best = 0;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == edges.size()) {
            int covered = 0;
            for (int v = 0; v < n; ++v) covered += load[v] == 2;
            best = std::max(best, covered);
            return;
        }
        auto [u, v] = edges[i];
        for (int w = 0; w <= 2; ++w) {
            if (load[u] + w > 2 || load[v] + w > 2) break;
            load[u] += w;
            load[v] += w;
            rec(i + 1);
            load[u] -= w;
            load[v] -= w;
        }
    };
    rec(0);
    return best;
}

// Maximum matching of a bipartite graph by plain recursion over left vertices.
inline int matching_oracle(const myclab::BipartiteGraph& b) {
    std::vector<char> used(b.right_size, 0);
    std::function<int(int)> rec = [&](int l) -> int {
        if (l == b.left_size) return 0;
        int best = rec(l + 1);  // leave l unmatched
        for (int r : b.left_adj[l])
            if (!used[r]) {
                used[r] = 1;
                best = std::max(best, 1 + rec(l + 1));
                used[r] = 0;
            }
        return best;
    };
    return rec(0);
}

// s_m by mask DP: best coverage by disjoint stars (center + 1..m leaves)
// inside the available-vertex mask.
inline int star_matching_oracle(const Graph& g, int m) {
    int n = g.order();
    std::vector<int> memo(size_t(1) << n, -1);
    std::function<int(unsigned)> rec = [&](unsigned mask) -> int {
        if (mask == 0) return 0;
        int& out = memo[mask];
        if (out >= 0) return out;
        int v = std::countr_zero(mask);
        out = rec(mask & ~(1u << v));  // leave v uncovered
        // v as the center of a star
        std::vector<int> avail;
        for (int u : g.neighbors(v))
            if (mask >> u & 1) avail.push_back(u);
        std::function<void(size_t, unsigned, int)> pick = [&](size_t i, unsigned leaves, int cnt) {
            if (cnt >= 1) out = std::max(out, 1 + cnt + rec(mask & ~(1u << v) & ~leaves));
            if (cnt == m) return;
            for (size_t j = i; j < avail.size(); ++j) pick(j + 1, leaves | (1u << avail[j]), cnt + 1);
        };
        pick(0, 0, 0);
        // v as a leaf of a star centered at a neighbor
        for (int c : g.neighbors(v)) {
            if (!(mask >> c & 1)) continue;
            std::vector<int> rest;
            for (int u : g.neighbors(c))
                if (u != v && (mask >> u & 1)) rest.push_back(u);
            std::function<void(size_t, unsigned, int)> pick2 = [&](size_t i, unsigned leaves, int cnt) {
                out = std::max(out, 2 + cnt + rec(mask & ~(1u << v) & ~(1u << c) & ~leaves));
                if (cnt == m - 1) return;
                for (size_t j = i; j < rest.size(); ++j) pick2(j + 1, leaves | (1u << rest[j]), cnt + 1);
            };
            pick2(0, 0, 0);
        }
        return out;
    };
    return rec((1u << n) - 1);
}

// Minimum path cover by recursion: peel off one simple path containing the
// lowest remaining vertex, in every possible way.
inline int path_cover_oracle(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    std::vector<int> memo(size_t(1) << n, -1);
    std::function<int(unsigned)> solve = [&](unsigned mask) -> int {
        if (mask == 0) return 0;
        int& out = memo[mask];
        if (out >= 0) return out;
        out = n + 1;
        int v = std::countr_zero(mask);
        // enumerate simple paths through v: extend in both directions
        std::function<void(unsigned, int, int)> grow = [&](unsigned path, int a, int b) {
            out = std::min(out, 1 + solve(mask & ~path));
            for (int u : g.neighbors(a))
                if ((mask >> u & 1) && !(path >> u & 1)) grow(path | (1u << u), u, b);
            for (int u : g.neighbors(b))
                if ((mask >> u & 1) && !(path >> u & 1)) grow(path | (1u << u), a, u);
        };
        grow(1u << v, v, v);
        return out;
    };
    return solve((1u << n) - 1);
}

// The D2 neighborhood condition checked over every vertex subset directly.
inline bool d2_oracle(const Graph& g) {
    int n = g.order();
    myclab::DistanceTable d = distance_oracle(g);
    auto far_from = [&](int v, int s) { return !d.reachable(v, s) || d.at(v, s) >= 3; };
    for (unsigned s = 1; s < (1u << n); ++s) {
        int size = std::popcount(s);
        int d2 = 0;
        for (int v = 0; v < n; ++v) {
            bool in = false;
            for (int m = 0; m < n && !in; ++m)
                if ((s >> m & 1) && far_from(v, m)) in = true;
            d2 += in;
        }
        if (d2 < size) return false;
    }
    return true;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace oracles

#endif
