#ifndef MYCLAB_L21_HPP
#define MYCLAB_L21_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "myclab/graph.hpp"

namespace myclab {

struct Labeling {
    std::vector<int> labels;  // one non-negative label per vertex

    int span() const;
};

struct Violation {
    int u, v;
    int distance;  // 1 or 2
    int gap;       // |f(u) - f(v)|
    int required;  // 2 at distance 1, 1 at distance 2
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

ValidationReport validate(const Graph& g, const Labeling& f);

enum class SearchStatus { feasible, infeasible, unknown };

struct SolverOptions {
    uint64_t node_budget = 1'000'000'000;
};

inline constexpr int kMaxSolverSpan = 255;

struct FeasibilityResult {
    SearchStatus status;
    std::optional<Labeling> witness;  // present iff feasible
    uint64_t nodes = 0;
};

// Exhaustive branch-and-bound decision: does g admit an L(2,1)-labeling of
// span <= k? "unknown" only when the node budget runs out.
FeasibilityResult is_span_feasible(const Graph& g, int k, const SolverOptions& opts = {});

struct LambdaResult {
    SearchStatus status;  // feasible = exact value found; unknown = budget hit
    int value = 0;        // exact lambda when status == feasible
    int lower = 0, upper = 0;  // bounds, meaningful when status == unknown
    std::optional<Labeling> witness;
    uint64_t nodes = 0;
};

LambdaResult lambda_exact(const Graph& g, const SolverOptions& opts = {});

// First-fit greedy; span <= maxdeg^2 + 2 maxdeg (Griggs-Yeh).
Labeling greedy_upper(const Graph& g);

// Engine lower bound used to seed lambda_exact: max over Delta+1 (if an edge
// exists) and n-1 (if diameter <= 2).
int simple_lower_bound(const Graph& g);

}  // namespace myclab

#endif
