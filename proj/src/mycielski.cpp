#include "myclab/mycielski.hpp"

#include <algorithm>
#include <stdexcept>

namespace myclab {

namespace {

long encode(const MycVertexId& id) {
    long tag = id.kind == MycVertexId::Kind::base ? 0 : 1;
    return (tag << 62) | (static_cast<long>(id.i) << 32) | static_cast<long>(id.k);
}

}  // namespace

std::string to_string(const MycVertexId& id) {
    if (id.kind == MycVertexId::Kind::base)
        return "v" + std::to_string(id.i) + "^" + std::to_string(id.k);
    return "u" + std::to_string(id.i) + "," + std::to_string(id.k);
}

MycVertexId parse_vertex_id(const std::string& text) {
    auto fail = [&]() -> MycVertexId {
        throw std::invalid_argument("bad vertex id '" + text + "' (expected v<i>^<k> or u<i>,<j>)");
    };
    if (text.size() < 2) return fail();
    char sep = text[0] == 'v' ? '^' : text[0] == 'u' ? ',' : '\0';
    if (sep == '\0') return fail();
    size_t mid = text.find(sep);
    if (mid == std::string::npos || mid == 1 || mid + 1 == text.size()) return fail();
    MycVertexId id;
    id.kind = text[0] == 'v' ? MycVertexId::Kind::base : MycVertexId::Kind::root;
    try {
        id.i = std::stoi(text.substr(1, mid - 1));
        id.k = std::stoi(text.substr(mid + 1));
    } catch (const std::exception&) {
        return fail();
    }
    return id;
}

long iterated_order(long n, int t) {
    return ((n + 1) << t) - 1;
}

int MycGraph::index_of(const MycVertexId& id) const {
    auto it = index_.find(encode(id));
    if (it == index_.end()) throw std::out_of_range("no vertex " + to_string(id));
    return it->second;
}

void MycGraph::rebuild_index() {
    index_.clear();
    for (int v = 0; v < graph.order(); ++v) index_[encode(ids[v])] = v;
}

MycGraph iterated_mycielski(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("iteration count must be >= 0");
    long final_order = iterated_order(g.order(), t);
    if (final_order > kMycVertexBudget)
        throw std::invalid_argument("M^t order " + std::to_string(final_order) + " exceeds the vertex budget " +
                                    std::to_string(kMycVertexBudget));

    MycGraph m;
    m.graph = g;
    m.t = 0;
    m.base_order = g.order();
    for (int i = 0; i < g.order(); ++i) m.ids.push_back({MycVertexId::Kind::base, i + 1, 0});

    for (int step = 1; step <= t; ++step) {
        int n = m.graph.order();
        Graph next(2 * n + 1);
        for (auto [u, v] : m.graph.edges()) {
            next.add_edge(u, v);
            next.add_edge(u, n + v);  // copy of v mirrors v's neighbors
            next.add_edge(n + u, v);
        }
        for (int v = 0; v < n; ++v) next.add_edge(n + v, 2 * n);  // root adjacent to all copies

        // copies shift their copy index: v_i^k -> v_i^{k + 2^{step-1}},
        // u_{i,j} -> u_{i, j + 2^{step-1-i}}
        std::vector<MycVertexId> ids = m.ids;
        for (int v = 0; v < n; ++v) {
            MycVertexId id = m.ids[v];
            if (id.kind == MycVertexId::Kind::base)
                id.k += 1 << (step - 1);
            else
                id.k += 1 << (step - 1 - id.i);
            ids.push_back(id);
        }
        ids.push_back({MycVertexId::Kind::root, step, 0});

        m.graph = std::move(next);
        m.ids = std::move(ids);
        m.t = step;
    }
    m.rebuild_index();
    return m;
}

MycGraph mycielski(const Graph& g) {
    return iterated_mycielski(g, 1);
}

StructuralProfile structural_profile(int n, int max_deg, std::optional<int> diam, bool has_isolated, int t) {
    if (t < 1) throw std::invalid_argument("structural_profile needs t >= 1");
    StructuralProfile p;
    p.order = iterated_order(n, t);
    p.max_degree = std::max((static_cast<long>(n + 1) << (t - 1)) - 1, static_cast<long>(max_deg) << t);
    if (has_isolated) {
        p.diameter = std::nullopt;
    } else {
        int base = diam ? std::max(2, *diam) : 4;  // disconnected base: infinite diameter capped at 4
        p.diameter = std::min(base, 4);
    }
    return p;
}

std::optional<std::string> structural_discrepancy(const Graph& g, const MycGraph& m) {
    if (m.t < 1) throw std::invalid_argument("structural_discrepancy needs t >= 1");
    const int n = g.order();
    const int t = m.t;
    const int copies = 1 << t;

    bool has_isolated = false;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) == 0) has_isolated = true;
    auto ecc = diameter_and_eccentricities(g);
    StructuralProfile want = structural_profile(n, n ? g.max_degree() : 0, ecc.diameter, has_isolated, t);

    auto fail = [](const std::string& what) { return std::optional<std::string>(what); };
    if (m.graph.order() != want.order)
        return fail("order " + std::to_string(m.graph.order()) + " != " + std::to_string(want.order));
    if (n > 0 && m.graph.max_degree() != want.max_degree)
        return fail("max degree " + std::to_string(m.graph.max_degree()) + " != " + std::to_string(want.max_degree));

    DistanceTable dm = distances(m.graph);
    DistanceTable dg = distances(g);
    if (want.diameter) {
        int got = 0;
        for (int u = 0; u < m.graph.order(); ++u)
            for (int v = 0; v < m.graph.order(); ++v) {
                if (!dm.reachable(u, v)) return fail("M^t disconnected, diameter predicted finite");
                got = std::max(got, dm.at(u, v));
            }
        if (got != *want.diameter)
            return fail("diameter " + std::to_string(got) + " != " + std::to_string(*want.diameter));
    }

    constexpr int far = 1 << 20;  // stand-in for infinite base distance
    auto base_dist = [&](int i, int j) { return dg.reachable(i, j) ? dg.at(i, j) : far; };
    auto at = [&](int u, int v) { return dm.at(u, v); };
    auto id = [](int i, int k) { return "v" + std::to_string(i + 1) + "^" + std::to_string(k); };

    // Copy-to-copy distances: all copies of two base vertices at distance <= 2
    // stay within distance 2, and distinct copies of a non-isolated vertex sit
    // at distance exactly 2.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || base_dist(i, j) > 2) continue;
            for (int k = 0; k < copies; ++k)
                for (int l = 0; l < copies; ++l)
                    if (at(m.base(i + 1, k), m.base(j + 1, l)) > 2)
                        return fail("d(" + id(i, k) + "," + id(j, l) + ") > 2");
        }
        if (g.degree(i) == 0) continue;
        for (int k = 0; k < copies; ++k)
            for (int l = k + 1; l < copies; ++l)
                if (at(m.base(i + 1, k), m.base(i + 1, l)) != 2)
                    return fail("d(" + id(i, k) + "," + id(i, l) + ") != 2");
    }

    if (t == 1) {
        // Single-step identities around the root and the copy layer.
        int u = m.root(1, 0);
        for (int i = 0; i < n; ++i) {
            if (g.degree(i) == 0) continue;
            if (at(u, m.base(i + 1, 1)) != 1) return fail("d(u," + id(i, 1) + ") != 1");
            if (at(u, m.base(i + 1, 0)) != 2) return fail("d(u," + id(i, 0) + ") != 2");
            for (int j = 0; j < n; ++j) {
                if (i == j || g.degree(j) == 0) continue;
                if (at(m.base(i + 1, 1), m.base(j + 1, 1)) != 2)
                    return fail("d(" + id(i, 1) + "," + id(j, 1) + ") != 2");
                if (at(m.base(i + 1, 0), m.base(j + 1, 0)) != std::min(4, base_dist(i, j)))
                    return fail("d(" + id(i, 0) + "," + id(j, 0) + ") != min(4, base distance)");
            }
        }
    }

    if (t >= 2) {
        const int h = copies / 2;  // 2^{t-1}
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int k = 1; k <= h - 1; ++k)
                    if (at(m.base(i + 1, k), m.base(j + 1, h + k)) != 2)
                        return fail("d(" + id(i, k) + "," + id(j, h + k) + ") != 2");
                for (int k = h + 1; k < copies; ++k)
                    if (at(m.base(i + 1, k), m.base(j + 1, h - 1)) != 2)
                        return fail("d(" + id(i, k) + "," + id(j, h - 1) + ") != 2");
            }

        // Two middle copy layers induce exactly the canonical double cover of g.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (m.graph.adjacent(m.base(i + 1, h - 1), m.base(j + 1, h - 1)) ||
                    m.graph.adjacent(m.base(i + 1, h), m.base(j + 1, h)))
                    return fail("edge inside copy layer " + std::to_string(h - 1) + " or " + std::to_string(h));
                if (m.graph.adjacent(m.base(i + 1, h - 1), m.base(j + 1, h)) != g.adjacent(i, j))
                    return fail("layers " + std::to_string(h - 1) + "/" + std::to_string(h) +
                                " do not induce the double cover at pair (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
            }
    }

    // Antipodal copy pairs of non-isolated vertices realize min(3, base distance).
    {
        const int h = copies / 2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || g.degree(i) == 0 || g.degree(j) == 0) continue;
                for (int k = 0; k <= h - 1; ++k)
                    if (at(m.base(i + 1, k), m.base(j + 1, copies - k - 1)) != std::min(3, base_dist(i, j)))
                        return fail("d(" + id(i, k) + "," + id(j, copies - k - 1) + ") != min(3, base distance)");
            }
    }

    return std::nullopt;
}

}  // namespace myclab
