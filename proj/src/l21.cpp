#include "myclab/l21.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace myclab {

int Labeling::span() const {
    int s = 0;
    for (int l : labels) s = std::max(s, l);
    return s;
}

namespace {

// distance-2 vertex sets (exactly 2), one bitset row per vertex
std::vector<uint64_t> dist2_rows(const Graph& g) {
    int n = g.order(), w = g.words();
    std::vector<uint64_t> d2(static_cast<size_t>(n) * w, 0);
    for (int v = 0; v < n; ++v) {
        uint64_t* out = d2.data() + static_cast<size_t>(v) * w;
        for (int u : g.neighbors(v))
            for (int i = 0; i < w; ++i) out[i] |= g.row(u)[i];
        for (int i = 0; i < w; ++i) out[i] &= ~g.row(v)[i];
        out[v / 64] &= ~(uint64_t{1} << (v % 64));
    }
    return d2;
}

}  // namespace

ValidationReport validate(const Graph& g, const Labeling& f) {
    int n = g.order();
    if (static_cast<int>(f.labels.size()) != n)
        throw std::invalid_argument("labeling must assign a label to every vertex");
    for (int l : f.labels)
        if (l < 0) throw std::invalid_argument("labels must be non-negative");

    ValidationReport rep;
    std::vector<uint64_t> d2 = dist2_rows(g);
    int w = g.words();
    auto scan = [&](int u, const uint64_t* row, int dist, int required) {
        for (int i = 0; i < w; ++i) {
            uint64_t bits = row[i];
            while (bits) {
                int v = i * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (v <= u) continue;
                int gap = std::abs(f.labels[u] - f.labels[v]);
                if (gap < required) rep.violations.push_back({u, v, dist, gap, required});
            }
        }
    };
    for (int u = 0; u < n; ++u) {
        scan(u, g.row(u), 1, 2);
        scan(u, d2.data() + static_cast<size_t>(u) * w, 2, 1);
    }
    rep.valid = rep.violations.empty();
    return rep;
}

namespace {

constexpr int kMaskWords = 4;  // labels 0..255

struct LabelMask {
    std::array<uint64_t, kMaskWords> w{};

    static LabelMask full(int k) {  // bits 0..k
        LabelMask m;
        for (int i = 0; i <= k; ++i) m.set(i);
        return m;
    }
    void set(int l) { w[l / 64] |= uint64_t{1} << (l % 64); }
    void clear(int l) { w[l / 64] &= ~(uint64_t{1} << (l % 64)); }
    bool test(int l) const { return (w[l / 64] >> (l % 64)) & 1; }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    void or_with(const LabelMask& o) {
        for (int i = 0; i < kMaskWords; ++i) w[i] |= o.w[i];
    }
};

struct Solver {
    int n, k;
    std::vector<uint64_t> adj, d2, conf;  // one word per vertex (n <= 64)
    std::vector<LabelMask> masks;
    std::vector<int> labels;
    uint64_t unassigned;
    std::vector<int> clique;  // pairwise in-conflict vertices: labels all distinct
    uint64_t budget, nodes = 0;
    bool out_of_budget = false;
    std::optional<Labeling> witness;

    Solver(const Graph& g, int span, uint64_t node_budget) : n(g.order()), k(span), budget(node_budget) {
        adj.assign(n, 0);
        d2.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v && g.adjacent(u, v)) adj[v] |= uint64_t{1} << u;
        for (int v = 0; v < n; ++v) {
            uint64_t s = 0;
            for (int u = 0; u < n; ++u)
                if ((adj[v] >> u) & 1) s |= adj[u];
            d2[v] = s & ~adj[v] & ~(uint64_t{1} << v);
        }
        conf.resize(n);
        for (int v = 0; v < n; ++v) conf[v] = adj[v] | d2[v];
        masks.assign(n, LabelMask::full(k));
        labels.assign(n, -1);
        unassigned = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

        // greedy clique in the conflict graph, seeded at the densest vertex
        int seed = 0;
        for (int v = 1; v < n; ++v)
            if (std::popcount(conf[v]) > std::popcount(conf[seed])) seed = v;
        if (n > 0) {
            uint64_t common = conf[seed];
            clique.push_back(seed);
            while (common) {
                int best = -1;
                uint64_t c = common;
                while (c) {
                    int v = std::countr_zero(c);
                    c &= c - 1;
                    if (best < 0 || std::popcount(conf[v] & common) > std::popcount(conf[best] & common)) best = v;
                }
                clique.push_back(best);
                common &= conf[best];
            }
        }
    }

    bool clique_fits() const {
        LabelMask u;
        int need = 0;
        for (int v : clique) {
            if (labels[v] >= 0) continue;
            u.or_with(masks[v]);
            ++need;
        }
        return u.count() >= need;
    }

    SearchStatus dfs(int forced) {
        if (++nodes > budget) {
            out_of_budget = true;
            return SearchStatus::unknown;
        }
        if (!unassigned) {
            Labeling f;
            f.labels = labels;
            witness = f;
            return SearchStatus::feasible;
        }
        int v = forced;
        if (v < 0) {
            int best_cnt = k + 2;
            uint64_t rest = unassigned;
            while (rest) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                int c = masks[u].count();
                if (c < best_cnt ||
                    (c == best_cnt && std::popcount(conf[u] & unassigned) > std::popcount(conf[v] & unassigned))) {
                    best_cnt = c;
                    v = u;
                }
            }
            if (best_cnt == 0) return SearchStatus::infeasible;
        }
        if (!clique_fits()) return SearchStatus::infeasible;

        bool cut = false;
        std::vector<LabelMask> saved = masks;
        for (int l = 0; l <= k; ++l) {
            if (!masks[v].test(l)) continue;
            labels[v] = l;
            unassigned &= ~(uint64_t{1} << v);
            uint64_t touch = adj[v] & unassigned;
            bool dead = false;
            while (touch) {
                int u = std::countr_zero(touch);
                touch &= touch - 1;
                if (l > 0) masks[u].clear(l - 1);
                masks[u].clear(l);
                if (l < k) masks[u].clear(l + 1);
                if (masks[u].count() == 0) dead = true;
            }
            touch = d2[v] & unassigned;
            while (touch) {
                int u = std::countr_zero(touch);
                touch &= touch - 1;
                masks[u].clear(l);
                if (masks[u].count() == 0) dead = true;
            }
            SearchStatus r = dead ? SearchStatus::infeasible : dfs(-1);
            masks = saved;
            unassigned |= uint64_t{1} << v;
            labels[v] = -1;
            if (r == SearchStatus::feasible) return r;
            if (r == SearchStatus::unknown) cut = true;
            if (out_of_budget) break;
        }
        return cut || out_of_budget ? SearchStatus::unknown : SearchStatus::infeasible;
    }

    SearchStatus solve() {
        if (n == 0) {
            witness = Labeling{};
            return SearchStatus::feasible;
        }
        if (static_cast<int>(clique.size()) > k + 1) return SearchStatus::infeasible;
        // reversal symmetry f -> k-f: pin the first branched vertex to the lower half
        int v0 = 0;
        for (int v = 1; v < n; ++v)
            if (std::popcount(conf[v]) > std::popcount(conf[v0])) v0 = v;
        for (int l = k / 2 + 1; l <= k; ++l) masks[v0].clear(l);
        return dfs(v0);
    }
};

}  // namespace

FeasibilityResult is_span_feasible(const Graph& g, int k, const SolverOptions& opts) {
    if (k < 0) throw std::invalid_argument("span budget must be >= 0");
    if (k > kMaxSolverSpan) throw std::invalid_argument("solver supports span <= " + std::to_string(kMaxSolverSpan));
    if (g.order() > 64) throw std::invalid_argument("exact solver supports <= 64 vertices");
    Solver s(g, k, opts.node_budget);
    SearchStatus st = s.solve();
    FeasibilityResult r{st, std::move(s.witness), s.nodes};
    return r;
}

int simple_lower_bound(const Graph& g) {
    int lo = 0;
    if (g.edge_count() > 0) lo = g.max_degree() + 1;
    auto ecc = diameter_and_eccentricities(g);
    if (ecc.diameter && *ecc.diameter <= 2 && g.order() >= 1) lo = std::max(lo, g.order() - 1);
    return lo;
}

Labeling greedy_upper(const Graph& g) {
    int n = g.order();
    std::vector<uint64_t> d2 = dist2_rows(g);
    int w = g.words();
    Labeling f;
    f.labels.assign(n, -1);
    int cap = g.max_degree() * g.max_degree() + 2 * g.max_degree();
    std::vector<char> forb(cap + 1);
    for (int v = 0; v < n; ++v) {
        std::fill(forb.begin(), forb.end(), 0);
        auto mark = [&](const uint64_t* row, bool wide) {
            for (int i = 0; i < w; ++i) {
                uint64_t bits = row[i];
                while (bits) {
                    int u = i * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (f.labels[u] < 0) continue;
                    int l = f.labels[u];
                    if (l <= cap) forb[l] = 1;
                    if (wide) {
                        if (l > 0) forb[l - 1] = 1;
                        if (l < cap) forb[l + 1] = 1;
                    }
                }
            }
        };
        mark(g.row(v), true);
        mark(d2.data() + static_cast<size_t>(v) * w, false);
        int l = 0;
        while (l <= cap && forb[l]) ++l;
        f.labels[v] = l;
    }
    return f;
}

LambdaResult lambda_exact(const Graph& g, const SolverOptions& opts) {
    LambdaResult res;
    if (g.order() == 0) {
        res.status = SearchStatus::feasible;
        res.witness = Labeling{};
        return res;
    }
    Labeling greedy = greedy_upper(g);
    int hi = greedy.span();
    int lo = simple_lower_bound(g);
    if (g.order() > 64) {
        res.status = SearchStatus::unknown;
        res.lower = lo;
        res.upper = hi;
        return res;
    }
    uint64_t spent = 0;
    for (int k = lo; k < hi; ++k) {
        if (k > kMaxSolverSpan || spent >= opts.node_budget) {
            res.status = SearchStatus::unknown;
            res.lower = k;
            res.upper = hi;
            res.nodes = spent;
            return res;
        }
        SolverOptions sub = opts;
        sub.node_budget = opts.node_budget - spent;
        FeasibilityResult r = is_span_feasible(g, k, sub);
        spent += r.nodes;
        if (r.status == SearchStatus::feasible) {
            res.status = SearchStatus::feasible;
            res.value = k;
            res.lower = res.upper = k;
            res.witness = std::move(r.witness);
            res.nodes = spent;
            return res;
        }
        if (r.status == SearchStatus::unknown) {
            res.status = SearchStatus::unknown;
            res.lower = k;
            res.upper = hi;
            res.nodes = spent;
            return res;
        }
    }
    res.status = SearchStatus::feasible;
    res.value = hi;
    res.lower = res.upper = hi;
    res.witness = std::move(greedy);
    res.nodes = spent;
    return res;
}

}  // namespace myclab
