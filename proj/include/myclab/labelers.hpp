#ifndef MYCLAB_LABELERS_HPP
#define MYCLAB_LABELERS_HPP

#include <optional>
#include <vector>

#include "myclab/graph.hpp"
#include "myclab/l21.hpp"
#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"

namespace myclab {

// A Mycielskian together with a labeling proven valid on it. Every labeler
// validates its output before returning.
struct MycLabeling {
    MycGraph myc;
    Labeling labeling;
};

// Lift a valid labeling h of g to M(g) with span (n+1)+span(h): copies get
// 0..n-1, originals get n+h shifted so the 0-labeled vertex sits at copy
// label n-1, root gets (n+1)+span(h).
MycLabeling label_upper_shift(const Graph& g, const Labeling& h);

// Ordered blocks over the base graph; all pairwise distances inside a block
// are >= 3, all blocks except possibly the last have size >= 3, and
// consecutive blocks link with d(last of r, first of r+1) >= 2.
struct CliquePartition {
    std::vector<std::vector<int>> blocks;
};

inline constexpr int kCliquePartitionCeiling = 14;

std::optional<CliquePartition> find_clique_partition(const Graph& g);
void check_clique_partition(const Graph& g, const CliquePartition& cp);

// Span n+1 labeling of M(g) from a clique partition.
MycLabeling label_clique_partition(const Graph& g, const CliquePartition& cp);

enum class Family { path, cycle };

// Optimal labeling of M(P_n) / M(C_n), spans per the known formulas.
MycLabeling label_family(Family family, int n);

// M^t(K_n) at span 2^t(n+1)-2; t=2 is the consecutive distinct-label scheme,
// larger t lifts it with label_upper_shift.
MycLabeling label_m2_complete(int n, int t);

// M^2(g) at span 4n+1 for graphs of diameter >= 3.
MycLabeling label_m2_diam3(const Graph& g);

// M^t(g) at span 2^{t-1}(n+2)-2 from a perfect 2-matching of the complement
// of g squared; throws if the certificate is unusable or no component
// orientation satisfies the linking conditions.
MycLabeling label_from_two_matching(const Graph& g, int t, const TwoMatchingCertificate& cert);

// M^t(g) at span 2^{t-1}(2n-p+2)-2 where p vertices carry a maximum
// 2-matching of the complement of g squared and the rest are labeled by the
// consecutive chi-sequence.
MycLabeling label_partial_two_matching(const Graph& g, int t);

}  // namespace myclab

#endif
