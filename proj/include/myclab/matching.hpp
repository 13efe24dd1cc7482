#ifndef MYCLAB_MATCHING_HPP
#define MYCLAB_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "myclab/graph.hpp"

namespace myclab {

// Search ceilings for the exact combinatorial routines.
inline constexpr int kStarMatchingCeiling = 16;
inline constexpr int kSubsetConditionCeiling = 20;
inline constexpr int kPathCoverCeiling = 18;

struct Matching {
    std::vector<std::pair<int, int>> edges;  // (left, right) part-local indices
};

// Hopcroft-Karp maximum matching.
Matching max_bipartite_matching(const BipartiteGraph& b);

// nu_2(g): maximum 2-matching weight, via matching on the double cover.
int nu2(const Graph& g);

// Spanning (or partial) decomposition into single edges and odd cycles.
struct TwoMatchingCertificate {
    std::vector<std::pair<int, int>> edge_components;
    std::vector<std::vector<int>> cycle_components;  // odd length >= 3

    int covered() const;
    std::vector<int> vertices() const;
};

struct TwoMatchingResult {
    std::optional<TwoMatchingCertificate> certificate;  // present iff a perfect 2-matching exists
    std::vector<int> violator;  // independent S with |N(S)| < |S| otherwise
};

TwoMatchingResult perfect_two_matching(const Graph& g);

// Maximum (possibly partial) 2-matching as a certificate covering nu2(g) vertices.
TwoMatchingCertificate maximum_two_matching(const Graph& g);

// Throws if the certificate is structurally broken for g (overlaps, non-edges,
// even or short cycles).
void check_certificate(const Graph& g, const TwoMatchingCertificate& cert);

struct StarMatching {
    struct Star {
        int center;
        std::vector<int> leaves;
    };
    std::vector<Star> stars;

    int order() const;  // vertices covered
};

// s_m(g) with an optimal witness; exact branch and bound, n <= kStarMatchingCeiling.
std::pair<int, StarMatching> star_matching_number(const Graph& g, int m);

struct ConditionResult {
    bool holds = true;
    std::vector<int> violating;  // witness set when the condition fails
};

// |N(S)| >= |S|/m over all independent S; n <= kSubsetConditionCeiling.
ConditionResult perfect_star_matching_condition(const Graph& g, int m);

// Minimum number of vertex-disjoint paths covering V; n <= kPathCoverCeiling.
int path_cover_number(const Graph& g);

// |D_2(S)| >= |S| for every S, where D_2(S) collects vertices at distance > 2
// from some member of S. Equivalent to a perfect 2-matching of the
// complement of g squared.
ConditionResult d2_condition(const Graph& g);

// i_4(g) = n - s_4(g).
int i4(const Graph& g);

}  // namespace myclab

#endif
