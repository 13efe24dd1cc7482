#ifndef MYCLAB_BOUNDS_HPP
#define MYCLAB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "myclab/graph.hpp"
#include "myclab/l21.hpp"

namespace myclab {

struct BoundEntry {
    enum class Kind { lower, upper, exact };
    Kind kind;
    long value;
    std::string rule;   // theorem tag, e.g. "thm3.1-lower"
    bool applicable;    // false entries carry the failed hypothesis in note
    std::string note;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::optional<long> best_lower, best_upper;

    void add(BoundEntry e);
    void finalize();  // recompute best bounds from applicable entries
};

struct BoundOptions {
    SolverOptions solver;
    int exact_lambda_ceiling = 12;    // base graphs up to this order get lambda_exact inside Thm 3.1/4.1
    bool include_conjecture = false;  // emit the conjectural iterated upper bound (never in best_upper)
};

BoundReport bounds_for_mycielski(const Graph& g, const BoundOptions& opts = {});
BoundReport bounds_for_iterated(const Graph& g, int t, const BoundOptions& opts = {});

// Exact lambda(M(g)) from the 4-star-matching characterization when its
// hypotheses apply; nullopt = not determined by that route.
std::optional<long> lambda_mycielski_via_i4(const Graph& g);

}  // namespace myclab

#endif
