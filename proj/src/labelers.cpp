#include "myclab/labelers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace myclab {

namespace {

// attach labels (built per MycVertexId) to the graph and insist they validate
MycLabeling finish(MycGraph myc, const std::vector<std::pair<MycVertexId, int>>& assignment, const char* what) {
    Labeling f;
    f.labels.assign(myc.graph.order(), -1);
    for (const auto& [id, label] : assignment) {
        int v = myc.index_of(id);
        if (f.labels[v] != -1) throw std::logic_error(std::string(what) + ": vertex labeled twice: " + to_string(id));
        f.labels[v] = label;
    }
    for (int v = 0; v < myc.graph.order(); ++v)
        if (f.labels[v] < 0)
            throw std::logic_error(std::string(what) + ": vertex left unlabeled: " + to_string(myc.ids[v]));
    ValidationReport rep = validate(myc.graph, f);
    if (!rep.valid) {
        const Violation& v = rep.violations.front();
        std::ostringstream msg;
        msg << what << ": produced an invalid labeling (" << rep.violations.size() << " violations; first: "
            << to_string(myc.ids[v.u]) << "=" << f.labels[v.u] << " vs " << to_string(myc.ids[v.v]) << "="
            << f.labels[v.v] << " at distance " << v.distance << ")";
        throw std::logic_error(msg.str());
    }
    return {std::move(myc), std::move(f)};
}

MycVertexId base_id(int vertex, int copy) {
    return {MycVertexId::Kind::base, vertex + 1, copy};
}
MycVertexId root_id(int level, int copy) {
    return {MycVertexId::Kind::root, level, copy};
}

// distance with unreachable treated as large
int dist_or_big(const DistanceTable& dt, int a, int b) {
    int d = dt.at(a, b);
    return d == DistanceTable::unreachable ? 1 << 20 : d;
}

}  // namespace

MycLabeling label_upper_shift(const Graph& g, const Labeling& h) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("label_upper_shift needs a non-empty graph");
    ValidationReport rep = validate(g, h);
    if (!rep.valid) throw std::invalid_argument("label_upper_shift: the base labeling is invalid");
    int zero = -1;
    for (int v = 0; v < n; ++v)
        if (h.labels[v] == 0) zero = v;
    if (zero < 0) throw std::invalid_argument("label_upper_shift: some vertex must carry label 0");

    // positions 1..n with the 0-labeled vertex last
    std::vector<int> pos;
    for (int v = 0; v < n; ++v)
        if (v != zero) pos.push_back(v);
    pos.push_back(zero);

    MycGraph myc = mycielski(g);
    std::vector<std::pair<MycVertexId, int>> f;
    for (int j = 0; j < n; ++j) {
        int v = pos[j];
        f.emplace_back(base_id(v, 1), j);                 // copies: 0..n-1
        f.emplace_back(base_id(v, 0), n + h.labels[v]);   // originals shifted by n
    }
    f.emplace_back(root_id(1, 0), n + 1 + h.span());
    return finish(std::move(myc), f, "label_upper_shift");
}

void check_clique_partition(const Graph& g, const CliquePartition& cp) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    if (cp.blocks.empty()) throw std::invalid_argument("clique partition has no blocks");
    DistanceTable dt = distances(g);
    for (size_t r = 0; r < cp.blocks.size(); ++r) {
        const auto& block = cp.blocks[r];
        if (block.empty()) throw std::invalid_argument("clique partition has an empty block");
        if (r + 1 < cp.blocks.size() && block.size() < 3)
            throw std::invalid_argument("all blocks except the last need size >= 3");
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("clique partition vertex out of range");
            if (seen[v]) throw std::invalid_argument("clique partition blocks overlap");
            seen[v] = 1;
        }
        for (size_t a = 0; a < block.size(); ++a)
            for (size_t b = a + 1; b < block.size(); ++b)
                if (dist_or_big(dt, block[a], block[b]) < 3)
                    throw std::invalid_argument("block members must be pairwise at distance >= 3");
        if (r > 0 && dist_or_big(dt, cp.blocks[r - 1].back(), block.front()) < 2)
            throw std::invalid_argument("consecutive blocks must link at distance >= 2");
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("clique partition does not cover vertex " + std::to_string(v));
}

MycLabeling label_clique_partition(const Graph& g, const CliquePartition& cp) {
    check_clique_partition(g, cp);
    int n = g.order();
    size_t k = cp.blocks.size();
    MycGraph myc = mycielski(g);
    std::vector<std::pair<MycVertexId, int>> f;
    int psi = 0;
    for (size_t r = 0; r < k; ++r) {
        const auto& block = cp.blocks[r];
        int nr = static_cast<int>(block.size());
        if (r + 1 < k || nr >= 3) {
            f.emplace_back(base_id(block[0], 0), psi);
            for (int i = 2; i <= nr; ++i) f.emplace_back(base_id(block[i - 1], 0), psi + 1);
            f.emplace_back(base_id(block[0], 1), psi + 1);
            if (nr >= 2) f.emplace_back(base_id(block[1], 1), psi);
            for (int i = 3; i <= nr; ++i) f.emplace_back(base_id(block[i - 1], 1), psi + i - 1);
        } else if (nr == 1) {
            f.emplace_back(base_id(block[0], 0), n);
            f.emplace_back(base_id(block[0], 1), n - 1);
        } else {  // tail block of size 2
            f.emplace_back(base_id(block[0], 0), n - 2);
            f.emplace_back(base_id(block[0], 1), n - 1);
            f.emplace_back(base_id(block[1], 0), n - 1);
            f.emplace_back(base_id(block[1], 1), n - 2);
        }
        psi += nr;
    }
    f.emplace_back(root_id(1, 0), n + 1);
    return finish(std::move(myc), f, "label_clique_partition");
}

namespace {

// Arrange given blocks: pick an order (small block last) and per-block
// first/last vertices so consecutive blocks link at distance >= 2.
std::optional<CliquePartition> orient_blocks(const DistanceTable& dt, std::vector<std::vector<int>> blocks) {
    size_t k = blocks.size();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end());
    long attempts = 0;
    do {
        bool sizes_ok = true;
        for (size_t r = 0; r + 1 < k && sizes_ok; ++r)
            if (blocks[order[r]].size() < 3) sizes_ok = false;
        if (!sizes_ok) continue;
        if (++attempts > 100000) break;

        std::vector<std::pair<int, int>> ends(k);  // (first, last) per ordered block
        std::function<bool(size_t)> rec = [&](size_t r) -> bool {
            if (r == k) return true;
            const auto& block = blocks[order[r]];
            for (int first : block) {
                if (r > 0 && dist_or_big(dt, ends[r - 1].second, first) < 2) continue;
                if (block.size() == 1) {
                    ends[r] = {first, first};
                    if (rec(r + 1)) return true;
                    continue;
                }
                for (int last : block) {
                    if (last == first) continue;
                    ends[r] = {first, last};
                    if (rec(r + 1)) return true;
                }
            }
            return false;
        };
        if (!rec(0)) continue;

        CliquePartition cp;
        for (size_t r = 0; r < k; ++r) {
            const auto& block = blocks[order[r]];
            auto [first, last] = ends[r];
            std::vector<int> arranged{first};
            for (int v : block)
                if (v != first && v != last) arranged.push_back(v);
            if (last != first) arranged.push_back(last);
            cp.blocks.push_back(arranged);
        }
        return cp;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace

std::optional<CliquePartition> find_clique_partition(const Graph& g) {
    int n = g.order();
    if (n > kCliquePartitionCeiling)
        throw std::invalid_argument("find_clique_partition supports n <= " + std::to_string(kCliquePartitionCeiling));
    if (n == 0) return std::nullopt;
    Graph h = complement(power(g, 2));
    DistanceTable dt = distances(g);
    std::vector<uint32_t> hn(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : h.neighbors(v)) hn[v] |= uint32_t{1} << u;

    std::vector<std::vector<int>> blocks;
    std::optional<CliquePartition> found;

    // enumerate partitions of V into cliques of h, at most one block below size 3
    std::function<bool(uint32_t, int)> rec = [&](uint32_t uncovered, int small_used) -> bool {
        if (!uncovered) {
            found = orient_blocks(dt, blocks);
            return found.has_value();
        }
        int v = std::countr_zero(uncovered);
        uint32_t pool = uncovered & hn[v] & ~((uint32_t{1} << (v + 1)) - 1);
        // grow cliques containing v over the pool, larger first
        std::vector<uint32_t> cliques;
        std::function<void(uint32_t, uint32_t)> grow = [&](uint32_t chosen, uint32_t cand) {
            cliques.push_back(chosen);
            uint32_t c = cand;
            while (c) {
                int u = std::countr_zero(c);
                c &= c - 1;
                grow(chosen | (uint32_t{1} << u), c & hn[u]);
            }
        };
        grow(uint32_t{1} << v, pool);
        std::stable_sort(cliques.begin(), cliques.end(),
                         [](uint32_t a, uint32_t b) { return std::popcount(a) > std::popcount(b); });
        for (uint32_t mask : cliques) {
            int size = std::popcount(mask);
            if (size < 3 && small_used) continue;
            std::vector<int> block;
            for (uint32_t m = mask; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                block.push_back(u);
            }
            blocks.push_back(block);
            if (rec(uncovered & ~mask, small_used + (size < 3 ? 1 : 0))) return true;
            blocks.pop_back();
        }
        return false;
    };
    rec((uint32_t{1} << n) - 1, 0);
    return found;
}

namespace {

MycLabeling labeling_from_arrays(const Graph& g, const std::vector<int>& originals, const std::vector<int>& copies,
                                 int root, const char* what) {
    MycGraph myc = mycielski(g);
    std::vector<std::pair<MycVertexId, int>> f;
    for (int v = 0; v < g.order(); ++v) {
        f.emplace_back(base_id(v, 0), originals[v]);
        f.emplace_back(base_id(v, 1), copies[v]);
    }
    f.emplace_back(root_id(1, 0), root);
    return finish(std::move(myc), f, what);
}

// Figure fixtures: optimal labelings of M(P_4), M(P_5), M(C_6), M(C_7), M(C_8).
MycLabeling fig_path4() {
    return labeling_from_arrays(path_graph(4), {4, 1, 6, 3}, {3, 2, 5, 4}, 0, "fig1");
}
MycLabeling fig_path5() {
    return labeling_from_arrays(path_graph(5), {6, 1, 7, 3, 1}, {3, 2, 5, 4, 6}, 0, "fig2");
}
MycLabeling fig_cycle6() {
    return labeling_from_arrays(cycle_graph(6), {1, 6, 3, 1, 7, 4}, {2, 7, 4, 5, 6, 3}, 0, "fig3");
}
MycLabeling fig_cycle7() {
    return labeling_from_arrays(cycle_graph(7), {4, 7, 1, 8, 3, 6, 1}, {3, 6, 2, 5, 4, 7, 8}, 0, "fig4");
}
MycLabeling fig_cycle8() {
    return labeling_from_arrays(cycle_graph(8), {9, 5, 1, 4, 2, 6, 1, 7}, {2, 6, 7, 8, 9, 5, 4, 3}, 0, "fig5");
}

// n >= 6 path scheme: fixed labels for the first six vertices, then a
// mod-3 pattern on originals and consecutive labels on copies.
MycLabeling path_scheme(int n) {
    static const int first_copies[6] = {6, 5, 4, 7, 2, 3};
    static const int first_originals[6] = {7, 1, 3, 6, 1, 4};
    std::vector<int> originals(n), copies(n);
    for (int i = 1; i <= n; ++i) {
        if (i <= 6) {
            copies[i - 1] = first_copies[i - 1];
            originals[i - 1] = first_originals[i - 1];
        } else {
            copies[i - 1] = i + 1;
            originals[i - 1] = i % 3 == 1 ? 6 : i % 3 == 2 ? 2 : 4;
        }
    }
    return labeling_from_arrays(path_graph(n), originals, copies, 0, "path scheme");
}

// Prop 3.7 clique partitions of C_n, n >= 9.
std::vector<std::vector<int>> cycle_blocks(int n) {
    std::vector<std::vector<int>> blocks;
    if (n % 3 == 0) {
        int t = n / 3;
        for (int i = 0; i < t; ++i) blocks.push_back({i, i + t, i + 2 * t});
    } else if (n % 3 == 1) {
        int t = n / 3;
        for (int i = 0; i < t; ++i) blocks.push_back({i, i + t, i + 2 * t});
        blocks.push_back({n - 1});
    } else {
        int t = (n + 2) / 3;
        for (int i = 1; i < t; ++i) blocks.push_back({i, i + t, i + 2 * t - 1});
        blocks.push_back({0, t});
    }
    return blocks;
}

}  // namespace

MycLabeling label_family(Family family, int n) {
    if (family == Family::path) {
        if (n < 3) throw std::invalid_argument("label_family(path) needs n >= 3");
        if (n == 4) return fig_path4();
        if (n == 5) return fig_path5();
        if (n >= 6) return path_scheme(n);
    } else {
        if (n < 3) throw std::invalid_argument("label_family(cycle) needs n >= 3");
        if (n == 6) return fig_cycle6();
        if (n == 7) return fig_cycle7();
        if (n == 8) return fig_cycle8();
        if (n >= 9) {
            Graph g = cycle_graph(n);
            auto cp = orient_blocks(distances(g), cycle_blocks(n));
            if (!cp) throw std::logic_error("cycle clique blocks admit no linking order");
            return label_clique_partition(g, *cp);
        }
    }
    // small cases: exact solver
    Graph g = family == Family::path ? path_graph(n) : cycle_graph(n);
    MycGraph myc = mycielski(g);
    LambdaResult r = lambda_exact(myc.graph);
    if (r.status != SearchStatus::feasible) throw std::logic_error("label_family: exact solver did not finish");
    MycLabeling out{std::move(myc), *r.witness};
    ValidationReport rep = validate(out.myc.graph, out.labeling);
    if (!rep.valid) throw std::logic_error("label_family: solver witness failed validation");
    return out;
}

namespace {

// chi_i = v^2 v^0 v^1 for odd i, v^1 v^0 v^2 for even i (consecutive labels)
void push_chi(std::vector<MycVertexId>& order, int v, int i) {
    if (i % 2 == 1) {
        order.push_back(base_id(v, 2));
        order.push_back(base_id(v, 0));
        order.push_back(base_id(v, 1));
    } else {
        order.push_back(base_id(v, 1));
        order.push_back(base_id(v, 0));
        order.push_back(base_id(v, 2));
    }
}

}  // namespace

MycLabeling label_m2_complete(int n, int t) {
    if (n < 2) throw std::invalid_argument("label_m2_complete needs n >= 2");
    if (t < 2) throw std::invalid_argument("label_m2_complete needs t >= 2");
    Graph k = complete_graph(n);
    long final_order = iterated_order(n, t);
    if (final_order > kMycVertexBudget)
        throw std::invalid_argument("M^t order exceeds the vertex budget");

    // t = 2: one consecutive label per vertex in the chi order
    std::vector<MycVertexId> order;
    for (int i = 1; i <= n; ++i) push_chi(order, i - 1, i);
    for (int v = n - 1; v >= 0; --v) order.push_back(base_id(v, 3));
    order.push_back(root_id(1, 1));
    order.push_back(root_id(1, 0));
    order.push_back(root_id(2, 0));

    MycGraph myc2 = iterated_mycielski(k, 2);
    Labeling f;
    f.labels.assign(myc2.graph.order(), -1);
    for (size_t i = 0; i < order.size(); ++i) f.labels[myc2.index_of(order[i])] = static_cast<int>(i);

    // lift to larger t one Mycielski step at a time
    for (int s = 3; s <= t; ++s) {
        Graph prev = iterated_mycielski(k, s - 1).graph;
        int np = prev.order();
        int zero = -1;
        for (int v = 0; v < np; ++v)
            if (f.labels[v] == 0) zero = v;
        std::vector<int> pos;
        for (int v = 0; v < np; ++v)
            if (v != zero) pos.push_back(v);
        pos.push_back(zero);
        Labeling lifted;
        lifted.labels.assign(2 * np + 1, -1);
        int span = f.span();
        for (int j = 0; j < np; ++j) {
            lifted.labels[np + pos[j]] = j;                       // copies
            lifted.labels[pos[j]] = np + f.labels[pos[j]];        // originals
        }
        lifted.labels[2 * np] = np + 1 + span;                    // new root
        f = std::move(lifted);
    }

    MycGraph myc = iterated_mycielski(k, t);
    ValidationReport rep = validate(myc.graph, f);
    if (!rep.valid) throw std::logic_error("label_m2_complete: produced an invalid labeling");
    return {std::move(myc), std::move(f)};
}

MycLabeling label_m2_diam3(const Graph& g) {
    int n = g.order();
    DistanceTable dt = distances(g);
    int a = -1, b = -1;
    for (int u = 0; u < n && a < 0; ++u)
        for (int v = u + 1; v < n && a < 0; ++v)
            if (dist_or_big(dt, u, v) >= 3) {
                a = u;
                b = v;
            }
    if (a < 0) throw std::invalid_argument("label_m2_diam3 needs a vertex pair at distance >= 3");

    // positions v_1..v_n with the distant pair at the ends
    std::vector<int> pos{a};
    for (int v = 0; v < n; ++v)
        if (v != a && v != b) pos.push_back(v);
    pos.push_back(b);

    std::vector<MycVertexId> order{base_id(a, 0), base_id(a, 1)};
    for (int i = 2; i <= n - 1; ++i) push_chi(order, pos[i - 1], i);
    for (int i = n - 1; i >= 1; --i) order.push_back(base_id(pos[i - 1], 3));
    order.push_back(base_id(a, 2));  // lands on 4n-5, reused below for v_n^0

    std::vector<std::pair<MycVertexId, int>> f;
    for (size_t i = 0; i < order.size(); ++i) f.emplace_back(order[i], static_cast<int>(i));
    f.emplace_back(base_id(b, 0), 4 * n - 5);
    f.emplace_back(base_id(b, 1), 4 * n - 4);
    f.emplace_back(base_id(b, 2), 4 * n - 3);
    f.emplace_back(base_id(b, 3), 4 * n - 2);
    f.emplace_back(root_id(1, 1), 4 * n - 1);
    f.emplace_back(root_id(1, 0), 4 * n);
    f.emplace_back(root_id(2, 0), 4 * n + 1);
    return finish(iterated_mycielski(g, 2), f, "label_m2_diam3");
}

namespace {

struct OrientedCertificate {
    std::vector<std::pair<int, int>> edges;     // (x_i, y_i) in chain order
    std::vector<std::vector<int>> cycles;       // rotated/reflected, in chain order
};

// Order edge components and cycles, choosing orientations/rotations so the
// construction's linking conditions hold: consecutive edges need
// d(x_{i-1}, x_i) >= 2 and d(y_{i-1}, y_i) >= 2; each cycle needs the
// previous component's final vertex at distance >= 2 from both of its ends.
std::optional<OrientedCertificate> orient_components(const DistanceTable& dt,
                                                     const std::vector<std::pair<int, int>>& edges,
                                                     const std::vector<std::vector<int>>& cycles) {
    OrientedCertificate out;
    std::vector<char> used_e(edges.size(), 0), used_c(cycles.size(), 0);

    std::function<bool(int)> place_cycles = [&](int prev_last) -> bool {
        if (out.cycles.size() == cycles.size()) return true;
        for (size_t ci = 0; ci < cycles.size(); ++ci) {
            if (used_c[ci]) continue;
            used_c[ci] = 1;
            const auto& cyc = cycles[ci];
            int len = static_cast<int>(cyc.size());
            for (int refl = 0; refl < 2; ++refl) {
                std::vector<int> base = cyc;
                if (refl) std::reverse(base.begin(), base.end());
                for (int rot = 0; rot < len; ++rot) {
                    std::vector<int> r(base.begin() + rot, base.end());
                    r.insert(r.end(), base.begin(), base.begin() + rot);
                    if (prev_last >= 0 &&
                        (dist_or_big(dt, prev_last, r.front()) < 2 || dist_or_big(dt, prev_last, r.back()) < 2))
                        continue;
                    out.cycles.push_back(r);
                    if (place_cycles(r.back())) return true;
                    out.cycles.pop_back();
                }
            }
            used_c[ci] = 0;
        }
        return false;
    };

    std::function<bool()> place_edges = [&]() -> bool {
        if (out.edges.size() == edges.size()) {
            int prev = out.edges.empty() ? -1 : out.edges.back().second;
            return place_cycles(prev);
        }
        for (size_t ei = 0; ei < edges.size(); ++ei) {
            if (used_e[ei]) continue;
            used_e[ei] = 1;
            for (int flip = 0; flip < 2; ++flip) {
                int x = flip ? edges[ei].second : edges[ei].first;
                int y = flip ? edges[ei].first : edges[ei].second;
                if (!out.edges.empty() &&
                    (dist_or_big(dt, out.edges.back().first, x) < 2 || dist_or_big(dt, out.edges.back().second, y) < 2))
                    continue;
                out.edges.emplace_back(x, y);
                if (place_edges()) return true;
                out.edges.pop_back();
            }
            used_e[ei] = 0;
        }
        return false;
    };

    if (place_edges()) return out;
    return std::nullopt;
}

// Core of the Theorem 4.7 construction: label the certificate's vertices and
// all roots; the roots start at p * 2^{t-1} where p = vertices covered.
void two_matching_core(const Graph& g, int t, const OrientedCertificate& oc, int p,
                       std::vector<std::pair<MycVertexId, int>>& f) {
    int big_t = 1 << t, half = 1 << (t - 1);
    int r = static_cast<int>(oc.edges.size());
    for (int i = 1; i <= r; ++i) {
        auto [x, y] = oc.edges[i - 1];
        int base = (i - 1) * big_t;
        bool last = i == r;
        for (int k = 0; k < big_t; ++k) {
            int fx, fy;
            if (!last) {
                fx = k < half ? half - k - 1 : 3 * half - k - 1;
                fy = k < half ? k + half : k - half;
            } else {
                fx = k < half ? half - k - 1 : k;
                fy = k < half ? big_t - k - 1 : k - half;
            }
            f.emplace_back(base_id(x, k), base + fx);
            f.emplace_back(base_id(y, k), base + fy);
        }
    }
    int phi = r * big_t;
    for (const auto& cyc : oc.cycles) {
        int len = static_cast<int>(cyc.size());
        for (int k = 0; k < big_t; ++k) {
            int f1 = phi + (k < half ? half - k - 1 : k);
            for (int j = 1; j <= len; ++j) {
                int val;
                if (j == 1)
                    val = f1;
                else if (j < len)
                    val = f1 + (j - 1) * half;
                else
                    val = k < half ? f1 + (len - 1) * half : phi + (half - (big_t - k - 1) - 1);
                f.emplace_back(base_id(cyc[j - 1], k), val);
            }
        }
        phi += len * half;
    }
    int label = p * half;
    for (int i = 1; i <= t; ++i)
        for (int j = (1 << (t - i)) - 1; j >= 0; --j) f.emplace_back(root_id(i, j), label++);
}

}  // namespace

MycLabeling label_from_two_matching(const Graph& g, int t, const TwoMatchingCertificate& cert) {
    if (t < 2) throw std::invalid_argument("label_from_two_matching needs t >= 2");
    int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("label_from_two_matching needs no isolated vertices");
    Graph h = complement(power(g, 2));
    check_certificate(h, cert);
    if (cert.covered() != n)
        throw std::invalid_argument("label_from_two_matching needs a perfect certificate (covers " +
                                    std::to_string(cert.covered()) + " of " + std::to_string(n) + ")");
    DistanceTable dt = distances(g);
    auto oc = orient_components(dt, cert.edge_components, cert.cycle_components);
    if (!oc) throw std::invalid_argument("no component orientation satisfies the linking conditions");
    std::vector<std::pair<MycVertexId, int>> f;
    two_matching_core(g, t, *oc, n, f);
    return finish(iterated_mycielski(g, t), f, "label_from_two_matching");
}

MycLabeling label_partial_two_matching(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("label_partial_two_matching needs t >= 2");
    int n = g.order();
    if (n < 2) throw std::invalid_argument("label_partial_two_matching needs n >= 2");
    Graph h = complement(power(g, 2));
    TwoMatchingCertificate cert = maximum_two_matching(h);
    std::vector<int> covered = cert.vertices();
    int p = static_cast<int>(covered.size());
    int big_t = 1 << t, half = 1 << (t - 1);

    std::vector<std::pair<MycVertexId, int>> f;
    if (p > 0) {
        DistanceTable dt = distances(g);
        auto oc = orient_components(dt, cert.edge_components, cert.cycle_components);
        if (!oc) throw std::logic_error("no component orientation satisfies the linking conditions");
        two_matching_core(g, t, *oc, p, f);
    } else {
        int label = 0;
        for (int i = 1; i <= t; ++i)
            for (int j = (1 << (t - i)) - 1; j >= 0; --j) f.emplace_back(root_id(i, j), label++);
    }

    // leftover vertices: consecutive chi-sequence over all copy levels
    std::vector<char> in_cert(n, 0);
    for (int v : covered) in_cert[v] = 1;
    std::vector<int> left;
    for (int v = 0; v < n; ++v)
        if (!in_cert[v]) left.push_back(v);
    int q = static_cast<int>(left.size());
    if (q > 0) {
        std::vector<MycVertexId> order;
        order.push_back(base_id(left[0], 0));
        order.push_back(base_id(left[0], 2));
        order.push_back(base_id(left[0], 1));
        for (int i = 2; i <= q; ++i) push_chi(order, left[i - 1], i);
        for (int i = q - 1; i >= 0; --i) order.push_back(base_id(left[i], 3));
        for (int lev = 4; lev < big_t; ++lev) {
            if (lev % 2 == 0)
                for (int i = 0; i < q; ++i) order.push_back(base_id(left[i], lev));
            else
                for (int i = q - 1; i >= 0; --i) order.push_back(base_id(left[i], lev));
        }
        int label = half * (p + 2) - 1;
        for (const auto& id : order) f.emplace_back(id, label++);
    }
    return finish(iterated_mycielski(g, t), f, "label_partial_two_matching");
}

}  // namespace myclab
