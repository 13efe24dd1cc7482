#include "myclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace myclab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
    bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
    DistanceTable dt = distances(g);
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = dt.at(u, v);
            if (d != DistanceTable::unreachable && d >= 1 && d <= k) h.add_edge(u, v);
        }
    return h;
}

Graph combine(const Graph& g1, const Graph& g2, CombineMode mode) {
    int n1 = g1.order(), n2 = g2.order();
    Graph h(n1 + n2);
    for (auto [u, v] : g1.edges()) h.add_edge(u, v);
    for (auto [u, v] : g2.edges()) h.add_edge(n1 + u, n1 + v);
    if (mode == CombineMode::join)
        for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n2; ++v) h.add_edge(u, n1 + v);
    return h;
}

DistanceTable distances(const Graph& g) {
    int n = g.order();
    DistanceTable dt;
    dt.n = n;
    dt.d.assign(static_cast<size_t>(n) * n, DistanceTable::unreachable);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* dist = dt.d.data() + static_cast<size_t>(s) * n;
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            for (int w = 0; w < g.words(); ++w) {
                uint64_t bits = g.row(v)[w];
                while (bits) {
                    int u = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (dist[u] == DistanceTable::unreachable) {
                        dist[u] = dist[v] + 1;
                        queue[tail++] = u;
                    }
                }
            }
        }
    }
    return dt;
}

EccentricityReport diameter_and_eccentricities(const Graph& g) {
    int n = g.order();
    DistanceTable dt = distances(g);
    EccentricityReport rep;
    rep.eccentricity.assign(n, 0);
    bool connected = true;
    for (int v = 0; v < n; ++v) {
        int ecc = 0;
        for (int u = 0; u < n; ++u) {
            int d = dt.at(v, u);
            if (d == DistanceTable::unreachable) {
                ecc = DistanceTable::unreachable;
                connected = false;
                break;
            }
            ecc = std::max(ecc, d);
        }
        rep.eccentricity[v] = ecc;
    }
    if (connected && n > 0)
        rep.diameter = *std::max_element(rep.eccentricity.begin(), rep.eccentricity.end());
    else if (n == 0)
        rep.diameter = 0;
    return rep;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

namespace {

void clique_search(const Graph& g, std::vector<int>& cand, int size, int& best) {
    if (size + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!cand.empty()) {
        if (size + static_cast<int>(cand.size()) <= best) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int u : cand)
            if (g.adjacent(u, v)) next.push_back(u);
        clique_search(g, next, size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    int best = 1;
    clique_search(g, all, 0, best);
    return best;
}

int eccentricity_two_count(const Graph& g) {
    EccentricityReport rep = diameter_and_eccentricities(g);
    if (!rep.diameter) return 0;
    return static_cast<int>(std::count(rep.eccentricity.begin(), rep.eccentricity.end(), 2));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
    return Graph(n);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be >= 1");
        n += p;
    }
    Graph g(n);
    int offset1 = 0;
    for (size_t a = 0; a < parts.size(); ++a) {
        int offset2 = offset1 + parts[a];
        for (size_t b = a + 1; b < parts.size(); ++b) {
            for (int u = 0; u < parts[a]; ++u)
                for (int v = 0; v < parts[b]; ++v) g.add_edge(offset1 + u, offset2 + v);
            offset2 += parts[b];
        }
        offset1 += parts[a];
    }
    return g;
}

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_size(left), right_size(right), graph(left + right), left_adj(left) {}

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
        throw std::invalid_argument("bipartite edge endpoint out of range");
    graph.add_edge(l, left_size + r);
    left_adj[l].push_back(r);
}

BipartiteGraph double_cover(const Graph& g) {
    int n = g.order();
    BipartiteGraph b(n, n);
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(v, u);
    }
    return b;
}

namespace {

// Lexicographically maximal packed upper-triangle bits over all vertex
// permutations, found by positional DFS with prefix pruning.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> perm;       // perm[pos] = original vertex placed at pos
    std::vector<char> used;
    std::vector<uint64_t> best;  // best prefix bits per position boundary
    bool have_best = false;
    std::vector<uint64_t> prefix;

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()), used(n, 0) {
        prefix.assign(n + 1, 0);
        best.assign(n + 1, 0);
    }

    // bits contributed by placing vertex v at position pos: adjacency to positions 0..pos-1
    uint64_t slice_bits(int v, int pos) const {
        uint64_t bits = 0;
        for (int p = 0; p < pos; ++p) bits = (bits << 1) | (g.adjacent(perm[p], v) ? 1 : 0);
        return bits;
    }

    void dfs(int pos) {
        if (pos == n) {
            have_best = true;
            best = prefix;
            return;
        }
        // collect candidate slices, try larger ones first
        std::vector<std::pair<uint64_t, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!used[v]) cands.emplace_back(slice_bits(v, pos), v);
        std::sort(cands.begin(), cands.end(), std::greater<>());
        for (auto [bits, v] : cands) {
            uint64_t next = (prefix[pos] << pos) | bits;
            if (have_best && next < best[pos + 1]) break;  // sorted: all remaining are worse
            if (have_best && next > best[pos + 1]) have_best = false;  // strictly better prefix found
            perm.push_back(v);
            used[v] = 1;
            prefix[pos + 1] = next;
            dfs(pos + 1);
            used[v] = 0;
            perm.pop_back();
            if (have_best && next < best[pos + 1]) break;
        }
    }
};

}  // namespace

uint64_t canonical_code(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
    if (n <= 1) return 0;
    CanonicalSearch cs(g);
    cs.dfs(0);
    return cs.best[n];
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (a.order() <= 11) return canonical_code(a) == canonical_code(b);
    // fallback: permutation search with degree pruning (desk scale only)
    int n = a.order();
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    std::function<bool()> dfs = [&]() -> bool {
        int pos = static_cast<int>(perm.size());
        if (pos == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || a.degree(pos) != b.degree(v)) continue;
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p)
                if (a.adjacent(p, pos) != b.adjacent(perm[p], v)) ok = false;
            if (!ok) continue;
            perm.push_back(v);
            used[v] = 1;
            if (dfs()) return true;
            used[v] = 0;
            perm.pop_back();
        }
        return false;
    };
    return dfs();
}

void enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& yield) {
    if (n < 1 || n > kEnumerationCeiling)
        throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kEnumerationCeiling));
    // grow canonical representatives one vertex at a time
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << (m - 1)); ++mask) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, m - 1);
                if (seen.insert(canonical_code(h)).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    for (const Graph& g : level)
        if (!connected_only || is_connected(g)) yield(g);
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
    std::vector<Graph> out;
    enumerate_graphs(n, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace myclab
