#ifndef MYCLAB_GRAPH_HPP
#define MYCLAB_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace myclab {

// Simple undirected graph with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    // Raw adjacency row of v: words() 64-bit words, bit u set iff uv is an edge.
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

Graph complement(const Graph& g);
Graph power(const Graph& g, int k);

enum class CombineMode { disjoint_union, join };
Graph combine(const Graph& g1, const Graph& g2, CombineMode mode);

struct DistanceTable {
    static constexpr int unreachable = -1;
    int n = 0;
    std::vector<int> d;  // row-major n*n; unreachable pairs hold the sentinel

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool reachable(int u, int v) const { return at(u, v) != unreachable; }
};

DistanceTable distances(const Graph& g);

struct EccentricityReport {
    std::vector<int> eccentricity;     // DistanceTable::unreachable for vertices in disconnected graphs
    std::optional<int> diameter;       // nullopt = infinite (disconnected)
};

EccentricityReport diameter_and_eccentricities(const Graph& g);

bool is_connected(const Graph& g);
int clique_number(const Graph& g);
// Number of vertices with eccentricity exactly 2 (0 if disconnected).
int eccentricity_two_count(const Graph& g);

// Named families; vertex numbering follows the usual conventions
// (path/cycle consecutive, star center first).
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}
Graph complete_multipartite(const std::vector<int>& parts);

// Bipartite graph over disjoint index ranges: left 0..left_size-1,
// right left_size..left_size+right_size-1 in `graph`.
struct BipartiteGraph {
    int left_size = 0;
    int right_size = 0;
    Graph graph;
    std::vector<std::vector<int>> left_adj;  // left index -> right indices (0-based within right part)

    BipartiteGraph() = default;
    BipartiteGraph(int left, int right);
    void add_edge(int l, int r);  // l in left part, r in right part (part-local indices)
};

// Canonical double cover G x K_2.
BipartiteGraph double_cover(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);
// Packed canonical upper-triangle code, usable as isomorphism key for n <= 11.
uint64_t canonical_code(const Graph& g);

inline constexpr int kEnumerationCeiling = 8;

// Stream every isomorphism class of graphs of order n exactly once.
void enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& yield);
std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace myclab

#endif
