#include "myclab/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace myclab {

namespace {

struct HopcroftKarp {
    const std::vector<std::vector<int>>& adj;
    int nl, nr;
    std::vector<int> match_l, match_r, dist;
    static constexpr int inf = 1 << 30;

    HopcroftKarp(const BipartiteGraph& b)
        : adj(b.left_adj), nl(b.left_size), nr(b.right_size), match_l(nl, -1), match_r(nr, -1), dist(nl) {}

    bool bfs() {
        std::vector<int> queue;
        for (int l = 0; l < nl; ++l) {
            dist[l] = match_l[l] < 0 ? 0 : inf;
            if (match_l[l] < 0) queue.push_back(l);
        }
        bool found = false;
        for (size_t h = 0; h < queue.size(); ++h) {
            int l = queue[h];
            for (int r : adj[l]) {
                int l2 = match_r[r];
                if (l2 < 0)
                    found = true;
                else if (dist[l2] == inf) {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (int r : adj[l]) {
            int l2 = match_r[r];
            if (l2 < 0 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = inf;
        return false;
    }

    void run() {
        while (bfs())
            for (int l = 0; l < nl; ++l)
                if (match_l[l] < 0) dfs(l);
    }
};

}  // namespace

Matching max_bipartite_matching(const BipartiteGraph& b) {
    HopcroftKarp hk(b);
    hk.run();
    Matching m;
    for (int l = 0; l < b.left_size; ++l)
        if (hk.match_l[l] >= 0) m.edges.emplace_back(l, hk.match_l[l]);
    return m;
}

int nu2(const Graph& g) {
    return static_cast<int>(max_bipartite_matching(double_cover(g)).edges.size());
}

int TwoMatchingCertificate::covered() const {
    return static_cast<int>(vertices().size());
}

std::vector<int> TwoMatchingCertificate::vertices() const {
    std::vector<int> out;
    for (auto [u, v] : edge_components) {
        out.push_back(u);
        out.push_back(v);
    }
    for (const auto& c : cycle_components) out.insert(out.end(), c.begin(), c.end());
    return out;
}

void check_certificate(const Graph& g, const TwoMatchingCertificate& cert) {
    std::vector<char> seen(g.order(), 0);
    auto take = [&](int v) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("certificate vertex out of range");
        if (seen[v]) throw std::invalid_argument("certificate components overlap at vertex " + std::to_string(v));
        seen[v] = 1;
    };
    for (auto [u, v] : cert.edge_components) {
        take(u);
        take(v);
        if (!g.adjacent(u, v)) throw std::invalid_argument("certificate edge not in the graph");
    }
    for (const auto& c : cert.cycle_components) {
        if (c.size() < 3 || c.size() % 2 == 0)
            throw std::invalid_argument("certificate cycles must have odd length >= 3");
        for (int v : c) take(v);
        for (size_t i = 0; i < c.size(); ++i)
            if (!g.adjacent(c[i], c[(i + 1) % c.size()]))
                throw std::invalid_argument("certificate cycle edge not in the graph");
    }
}

namespace {

// Decompose the partial permutation sigma (from a maximum double-cover
// matching) into certificate components: directed paths split into single
// edges (arc counts are even at optimality), even cycles split likewise,
// odd cycles kept whole.
TwoMatchingCertificate extract_certificate(const Graph& g, const std::vector<int>& sigma) {
    int n = g.order();
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        if (sigma[v] >= 0) ++indeg[sigma[v]];

    TwoMatchingCertificate cert;
    std::vector<char> done(n, 0);
    auto split_walk = [&](const std::vector<int>& walk) {
        for (size_t i = 0; i + 1 < walk.size(); i += 2) cert.edge_components.emplace_back(walk[i], walk[i + 1]);
    };
    for (int s = 0; s < n; ++s) {
        if (done[s] || indeg[s] > 0 || sigma[s] < 0) continue;  // path start
        std::vector<int> walk{s};
        done[s] = 1;
        for (int v = sigma[s]; v >= 0; v = sigma[v]) {
            walk.push_back(v);
            done[v] = 1;
            if (sigma[v] < 0) break;
        }
        if (walk.size() % 2 == 0)
            throw std::logic_error("odd-arc path in a maximum 2-matching decomposition");
        split_walk(walk);
    }
    for (int s = 0; s < n; ++s) {
        if (done[s] || sigma[s] < 0) continue;  // cycle
        std::vector<int> cyc;
        int v = s;
        do {
            cyc.push_back(v);
            done[v] = 1;
            v = sigma[v];
        } while (v != s);
        if (cyc.size() == 2)
            cert.edge_components.emplace_back(cyc[0], cyc[1]);
        else if (cyc.size() % 2 == 0)
            split_walk(cyc);
        else
            cert.cycle_components.push_back(cyc);
    }
    check_certificate(g, cert);
    return cert;
}

std::vector<int> sigma_from_matching(const Graph& g) {
    BipartiteGraph b = double_cover(g);
    HopcroftKarp hk(b);
    hk.run();
    return hk.match_l;
}

// Brute-force smallest independent Tutte violator, as the (never yet needed)
// fallback for refutation extraction.
std::vector<int> brute_force_violator(const Graph& g) {
    int n = g.order();
    if (n > 24) throw std::logic_error("no Tutte violator found by projection and graph too large for fallback");
    for (uint32_t s = 1; s < (uint32_t{1} << n); ++s) {
        std::vector<int> members;
        uint64_t nb = 0;
        bool indep = true;
        for (int v = 0; v < n && indep; ++v)
            if ((s >> v) & 1) {
                for (int u : members)
                    if (g.adjacent(u, v)) indep = false;
                members.push_back(v);
                for (int u : g.neighbors(v)) nb |= uint64_t{1} << u;
            }
        if (indep && std::popcount(nb) < static_cast<int>(members.size())) return members;
    }
    throw std::logic_error("maximum 2-matching not perfect yet no Tutte violator exists");
}

}  // namespace

TwoMatchingResult perfect_two_matching(const Graph& g) {
    int n = g.order();
    BipartiteGraph b = double_cover(g);
    HopcroftKarp hk(b);
    hk.run();
    int size = 0;
    for (int l = 0; l < n; ++l)
        if (hk.match_l[l] >= 0) ++size;

    TwoMatchingResult res;
    if (size == n) {
        res.certificate = extract_certificate(g, hk.match_l);
        return res;
    }

    // Koenig-style alternating reachability from unmatched left vertices;
    // S = { v : left copy reachable, right copy not } is independent and
    // violates |N(S)| >= |S|.
    std::vector<char> reach_l(n, 0), reach_r(n, 0);
    std::vector<int> queue;
    for (int l = 0; l < n; ++l)
        if (hk.match_l[l] < 0) {
            reach_l[l] = 1;
            queue.push_back(l);
        }
    for (size_t h = 0; h < queue.size(); ++h) {
        int l = queue[h];
        for (int r : b.left_adj[l]) {
            if (reach_r[r] || hk.match_l[l] == r) continue;
            reach_r[r] = 1;
            int l2 = hk.match_r[r];
            if (l2 >= 0 && !reach_l[l2]) {
                reach_l[l2] = 1;
                queue.push_back(l2);
            }
        }
    }
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (reach_l[v] && !reach_r[v]) s.push_back(v);

    auto is_violator = [&](const std::vector<int>& set) {
        if (set.empty()) return false;
        std::vector<char> nb(n, 0);
        for (size_t a = 0; a < set.size(); ++a)
            for (size_t c = a + 1; c < set.size(); ++c)
                if (g.adjacent(set[a], set[c])) return false;
        int count = 0;
        for (int v : set)
            for (int u : g.neighbors(v))
                if (!nb[u]) {
                    nb[u] = 1;
                    ++count;
                }
        return count < static_cast<int>(set.size());
    };
    if (!is_violator(s)) s = brute_force_violator(g);
    res.violator = std::move(s);
    return res;
}

TwoMatchingCertificate maximum_two_matching(const Graph& g) {
    return extract_certificate(g, sigma_from_matching(g));
}

int StarMatching::order() const {
    int total = 0;
    for (const auto& s : stars) total += 1 + static_cast<int>(s.leaves.size());
    return total;
}

namespace {

struct StarSearch {
    const Graph& g;
    int n, m;
    std::vector<uint32_t> nbr;
    int best = 0;
    std::vector<StarMatching::Star> current, best_stars;

    StarSearch(const Graph& graph, int max_leaves) : g(graph), n(graph.order()), m(max_leaves), nbr(n, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;
    }

    void with_star(int center, uint32_t leaves, uint32_t decided, int skipped) {
        StarMatching::Star star{center, {}};
        for (uint32_t b = leaves; b;) {
            int u = std::countr_zero(b);
            b &= b - 1;
            star.leaves.push_back(u);
        }
        current.push_back(star);
        rec(decided | (uint32_t{1} << center) | leaves, skipped);
        current.pop_back();
    }

    // enumerate non-empty subsets of pool up to the given size, then hand off
    void subsets(uint32_t pool, uint32_t chosen, int left, int center, uint32_t decided, int skipped) {
        if (chosen) with_star(center, chosen, decided, skipped);
        if (left == 0 || !pool) return;
        uint32_t p = pool;
        while (p) {
            int u = std::countr_zero(p);
            p &= p - 1;
            // only pick leaves above the last chosen one to avoid permutations
            subsets(p, chosen | (uint32_t{1} << u), left - 1, center, decided, skipped);
        }
    }

    void rec(uint32_t decided, int skipped) {
        if (n - skipped <= best) return;
        uint32_t undecided = (n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1) & ~decided;
        if (!undecided) {
            int covered = n - skipped;
            if (covered > best) {
                best = covered;
                best_stars = current;
            }
            return;
        }
        int v = std::countr_zero(undecided);
        uint32_t vbit = uint32_t{1} << v;
        // v as a center
        subsets(nbr[v] & undecided & ~vbit, 0, m, v, decided, skipped);
        // v as a leaf of an undecided neighbor c (the rest of c's star chosen now)
        uint32_t cs = nbr[v] & undecided & ~vbit;
        while (cs) {
            int c = std::countr_zero(cs);
            cs &= cs - 1;
            uint32_t pool = nbr[c] & undecided & ~vbit & ~(uint32_t{1} << c);
            with_star(c, vbit, decided, skipped);  // star K_{1,1} = {c, v}
            subsets_with_fixed(pool, vbit, m - 1, c, decided, skipped);
        }
        // v left uncovered
        rec(decided | vbit, skipped + 1);
    }

    void subsets_with_fixed(uint32_t pool, uint32_t fixed, int left, int center, uint32_t decided, int skipped) {
        if (left == 0 || !pool) return;
        uint32_t p = pool;
        while (p) {
            int u = std::countr_zero(p);
            p &= p - 1;
            with_star(center, fixed | (uint32_t{1} << u), decided, skipped);
            subsets_with_fixed(p, fixed | (uint32_t{1} << u), left - 1, center, decided, skipped);
        }
    }
};

}  // namespace

std::pair<int, StarMatching> star_matching_number(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("star size bound must be >= 1");
    if (g.order() > kStarMatchingCeiling)
        throw std::invalid_argument("star_matching_number supports n <= " + std::to_string(kStarMatchingCeiling));
    StarSearch s(g, m);
    s.rec(0, 0);
    StarMatching w;
    w.stars = s.best_stars;
    return {s.best, w};
}

int i4(const Graph& g) {
    return g.order() - star_matching_number(g, 4).first;
}

ConditionResult perfect_star_matching_condition(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("star size bound must be >= 1");
    int n = g.order();
    if (n > kSubsetConditionCeiling)
        throw std::invalid_argument("perfect_star_matching_condition supports n <= " +
                                    std::to_string(kSubsetConditionCeiling));
    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;

    ConditionResult res;
    // enumerate independent sets by ascending vertex choice
    std::vector<int> members;
    std::function<bool(int, uint32_t, uint32_t)> rec = [&](int next, uint32_t forbidden, uint32_t nb) -> bool {
        if (!members.empty() &&
            static_cast<long>(m) * std::popcount(nb) < static_cast<long>(members.size())) {
            res.holds = false;
            res.violating = members;
            return true;
        }
        for (int v = next; v < n; ++v) {
            if ((forbidden >> v) & 1) continue;
            members.push_back(v);
            if (rec(v + 1, forbidden | nbr[v] | (uint32_t{1} << v), nb | nbr[v])) return true;
            members.pop_back();
        }
        return false;
    };
    rec(0, 0, 0);
    return res;
}

int path_cover_number(const Graph& g) {
    int n = g.order();
    if (n > kPathCoverCeiling)
        throw std::invalid_argument("path_cover_number supports n <= " + std::to_string(kPathCoverCeiling));
    if (n == 0) return 0;
    constexpr uint8_t inf = 0xff;
    std::vector<uint8_t> table((static_cast<size_t>(1) << n) * n, inf);  // [mask][last]
    auto at = [&](uint32_t mask, int last) -> uint8_t& { return table[static_cast<size_t>(mask) * n + last]; };
    for (int v = 0; v < n; ++v) at(uint32_t{1} << v, v) = 1;
    uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        for (int last = 0; last < n; ++last) {
            uint8_t cur = at(mask, last);
            if (cur == inf) continue;
            uint32_t r = full & ~mask;
            while (r) {
                int w = std::countr_zero(r);
                r &= r - 1;
                uint32_t nm = mask | (uint32_t{1} << w);
                if (g.adjacent(last, w) && cur < at(nm, w)) at(nm, w) = cur;  // extend path
                if (cur + 1 < at(nm, w)) at(nm, w) = cur + 1;                 // start new path at w
            }
        }
    }
    uint8_t best = inf;
    for (int last = 0; last < n; ++last) best = std::min(best, at(full, last));
    return best;
}

ConditionResult d2_condition(const Graph& g) {
    TwoMatchingResult r = perfect_two_matching(complement(power(g, 2)));
    ConditionResult res;
    res.holds = r.certificate.has_value();
    res.violating = r.violator;
    return res;
}

}  // namespace myclab
