#include "myclab/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"

namespace myclab {

void BoundReport::add(BoundEntry e) {
    entries.push_back(std::move(e));
}

void BoundReport::finalize() {
    best_lower.reset();
    best_upper.reset();
    for (const auto& e : entries) {
        if (!e.applicable || e.note.find("conjectural") != std::string::npos) continue;
        if (e.kind != BoundEntry::Kind::upper)
            best_lower = best_lower ? std::max(*best_lower, e.value) : e.value;
        if (e.kind != BoundEntry::Kind::lower)
            best_upper = best_upper ? std::min(*best_upper, e.value) : e.value;
    }
}

namespace {

// lambda(g) for the Thm 3.1 / 4.1 upper bounds: exact when small, greedy otherwise.
std::pair<long, std::string> base_lambda(const Graph& g, const BoundOptions& opts) {
    if (g.order() <= opts.exact_lambda_ceiling) {
        LambdaResult r = lambda_exact(g, opts.solver);
        if (r.status == SearchStatus::feasible) return {r.value, "lambda(G) exact"};
        return {r.upper, "lambda(G) upper bound (search budget hit)"};
    }
    return {greedy_upper(g).span(), "lambda(G) greedy upper bound"};
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return g.order() == 0;
}

}  // namespace

BoundReport bounds_for_mycielski(const Graph& g, const BoundOptions& opts) {
    long n = g.order();
    long maxdeg = g.max_degree();
    auto ecc = diameter_and_eccentricities(g);
    BoundReport rep;

    rep.add({BoundEntry::Kind::lower, std::max(n + 1, 2 * (maxdeg + 1)), "thm3.1-lower", true,
             "max(n+1, 2(maxdeg+1))"});

    auto [lam, lam_src] = base_lambda(g, opts);
    rep.add({BoundEntry::Kind::upper, (n + 1) + lam, "thm3.1-upper", true, "(n+1)+lambda(G); " + lam_src});

    bool diam2 = ecc.diameter && *ecc.diameter == 2;
    rep.add({BoundEntry::Kind::upper, 2 * (maxdeg * maxdeg + 1), "cor3.1-upper", diam2,
             diam2 ? (n == maxdeg * maxdeg + 1 ? "diam = 2; Moore graph - bound 2(maxdeg^2+1) attainable"
                                               : "diam = 2")
                   : "needs diam = 2"});

    bool small_clique = clique_number(g) <= 4;
    rep.add({BoundEntry::Kind::upper, 2 * n, "cor3.2-upper", small_clique,
             small_clique ? "clique number <= 4" : "needs clique number <= 4"});

    long mindeg = g.min_degree();
    bool cor33 = n >= 2 && maxdeg <= n - 2 && 3 * (n - 1) + mindeg >= 4 * maxdeg;
    rep.add({BoundEntry::Kind::upper, 2 * n, "cor3.3-upper", cor33,
             cor33 ? "maxdeg <= n-2 and 3(n-1)+mindeg >= 4 maxdeg" : "needs maxdeg <= n-2 and 3(n-1)+mindeg >= 4 maxdeg"});

    if (n <= kStarMatchingCeiling) {
        long i4c = i4(complement(g));
        rep.add({BoundEntry::Kind::upper, 2 * n, "thm3.4-upper", i4c <= 4,
                 i4c <= 4 ? "i4(complement) = " + std::to_string(i4c) + " <= 4"
                          : "needs i4(complement) <= 4, have " + std::to_string(i4c)});
        rep.add({BoundEntry::Kind::exact, 2 * n + (i4c + 1) / 2 - 2, "thm3.4-exact", i4c >= 5,
                 i4c >= 5 ? "i4(complement) = " + std::to_string(i4c) + " >= 5"
                          : "needs i4(complement) >= 5, have " + std::to_string(i4c)});
    }

    bool no_isolated = !has_isolated_vertex(g);
    long k = eccentricity_two_count(g);
    rep.add({BoundEntry::Kind::lower, n + k, "prop4.1-lower", no_isolated,
             no_isolated ? "no isolated vertices; k = " + std::to_string(k) + " eccentricity-2 vertices"
                         : "needs no isolated vertices"});

    rep.finalize();
    return rep;
}

BoundReport bounds_for_iterated(const Graph& g, int t, const BoundOptions& opts) {
    if (t < 2) throw std::invalid_argument("bounds_for_iterated needs t >= 2 (use bounds_for_mycielski)");
    long n = g.order();
    if (n < 2) throw std::invalid_argument("bounds_for_iterated needs n >= 2");
    long maxdeg = g.max_degree();
    long half = 1L << (t - 1);
    auto ecc = diameter_and_eccentricities(g);
    BoundReport rep;

    rep.add({BoundEntry::Kind::lower, half * std::max(n + 2, 2 * (maxdeg + 2)) - 2, "thm4.1-lower", true,
             "2^{t-1} max(n+2, 2(maxdeg+2)) - 2"});

    auto [lam, lam_src] = base_lambda(g, opts);
    rep.add({BoundEntry::Kind::upper, (2 * half - 1) * (n + 1) + lam, "thm4.1-upper", true,
             "(2^t - 1)(n+1) + lambda(G); " + lam_src});

    rep.add({BoundEntry::Kind::upper, 2 * half * (n + 1) - 2, "obs4.1-upper", true, "order of M^t minus 1"});

    bool complete = g.edge_count() == n * (n - 1) / 2;
    bool diam2 = ecc.diameter && *ecc.diameter == 2;
    if (complete || diam2) {
        rep.add({BoundEntry::Kind::exact, 2 * half * (n + 1) - 2, "thm4.4-exact", true,
                 complete ? "G complete" : "diam = 2"});
    } else {
        rep.add({BoundEntry::Kind::exact, 2 * half * (n + 1) - 2, "thm4.4-exact", false,
                 "needs G complete or diam = 2"});
        rep.add({BoundEntry::Kind::upper, 2 * half * (n + 1) - 3, "thm4.4-upper", true,
                 "G not complete and diam != 2"});
    }

    bool no_isolated = !has_isolated_vertex(g);
    ConditionResult d2 = d2_condition(g);
    bool thm47 = no_isolated && d2.holds;
    rep.add({BoundEntry::Kind::exact, half * (n + 2) - 2, "thm4.7-exact", thm47,
             thm47 ? "no isolated vertices and the D2 condition holds"
                   : (no_isolated ? "D2 condition fails" : "needs no isolated vertices")});

    long p = nu2(complement(power(g, 2)));
    rep.add({BoundEntry::Kind::upper, half * (2 * n - p + 2) - 2, "thm4.8-upper", true,
             "p = nu2(complement(G^2)) = " + std::to_string(p)});

    long k = eccentricity_two_count(g);
    rep.add({BoundEntry::Kind::lower, half * (n + k + 2) - 2, "prop4.1-lower", no_isolated,
             no_isolated ? "no isolated vertices; k = " + std::to_string(k) + " eccentricity-2 vertices"
                         : "needs no isolated vertices"});

    if (opts.include_conjecture)
        rep.add({BoundEntry::Kind::upper, (2 * half - 1) * (n + 1) + maxdeg * maxdeg, "conjecture5-upper", true,
                 "conjectural; excluded from best bounds"});

    rep.finalize();
    return rep;
}

std::optional<long> lambda_mycielski_via_i4(const Graph& g) {
    long n = g.order();
    if (n > kStarMatchingCeiling) return std::nullopt;
    long i4c = i4(complement(g));
    auto ecc = diameter_and_eccentricities(g);
    if (ecc.diameter && (*ecc.diameter == 1 || *ecc.diameter == 2))
        return 2 * n + std::max(2L, (i4c + 1) / 2) - 2;
    if (i4c >= 5) return 2 * n + (i4c + 1) / 2 - 2;
    return std::nullopt;
}

}  // namespace myclab
