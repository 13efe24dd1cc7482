#ifndef MYCLAB_MYCIELSKI_HPP
#define MYCLAB_MYCIELSKI_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "myclab/graph.hpp"

namespace myclab {

// Vertex identity in an iterated Mycielskian: either a copy v_i^k of a base
// vertex (i in 1..n, k in 0..2^t-1) or a root u_{i,j} (level i in 1..t,
// copy j in 0..2^{t-i}-1).
struct MycVertexId {
    enum class Kind { base, root };
    Kind kind;
    int i;  // base index (1-based) or root level
    int k;  // copy index

    bool operator==(const MycVertexId&) const = default;
};

std::string to_string(const MycVertexId& id);          // "v3^1" / "u2,0"
MycVertexId parse_vertex_id(const std::string& text);

inline constexpr long kMycVertexBudget = 200000;

// Order of M^t(G): 2^t (n+1) - 1.
long iterated_order(long n, int t);

struct MycGraph {
    Graph graph;
    int t = 0;
    int base_order = 0;
    std::vector<MycVertexId> ids;  // vertex index -> identity

    int index_of(const MycVertexId& id) const;
    int base(int i, int k) const { return index_of({MycVertexId::Kind::base, i, k}); }
    int root(int i, int j) const { return index_of({MycVertexId::Kind::root, i, j}); }

private:
    friend MycGraph iterated_mycielski(const Graph&, int);
    std::unordered_map<long, int> index_;  // encoded id -> vertex index
    void rebuild_index();
};

MycGraph mycielski(const Graph& g);
MycGraph iterated_mycielski(const Graph& g, int t);

struct StructuralProfile {
    long order;
    long max_degree;
    std::optional<int> diameter;  // nullopt = not applicable (isolated vertices in the base)
};

// Closed-form order/degree/diameter predictions for M^t of a graph with the
// given parameters. diam is nullopt for a disconnected base; the diameter
// prediction additionally needs the base free of isolated vertices.
StructuralProfile structural_profile(int n, int max_deg, std::optional<int> diam, bool has_isolated, int t);

// Cross-check a constructed M^t(g) against every closed-form prediction:
// order, max degree, diameter, the distance identities between copies and
// roots, and the double-cover structure of the two middle copy layers.
// Returns a description of the first discrepancy, or nullopt if all hold.
std::optional<std::string> structural_discrepancy(const Graph& g, const MycGraph& m);

}  // namespace myclab

#endif
