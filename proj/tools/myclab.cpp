// myclab: construct Mycielskians, solve and bound L(2,1)-labelings, emit the
// constructive labelings, and survey the characterization theorems over small
// graph enumerations.
//
// Exit codes: 0 success/confirmed, 1 usage or input error, 2 refuted
// invariant (reproducer graph6 on stderr), 3 search budget exhausted.

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "myclab/bounds.hpp"
#include "myclab/graph.hpp"
#include "myclab/graph_io.hpp"
#include "myclab/l21.hpp"
#include "myclab/labelers.hpp"
#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"
#include "myclab/serialize.hpp"

namespace {

using myclab::Graph;
using json = myclab::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitBudget = 3;

myclab::SolverOptions solver_options(uint64_t flag_budget) {
    myclab::SolverOptions opts;
    if (flag_budget > 0) opts.node_budget = flag_budget;
    if (const char* env = std::getenv("MYCLAB_BUDGET")) {
        try {
            opts.node_budget = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("MYCLAB_BUDGET is not a node count: '" + std::string(env) + "'");
        }
    }
    return opts;
}

// Graph sources shared by the subcommands: an inline graph6 string, a file of
// graph6 lines or a JSON graph object, or a named family.
struct GraphInput {
    std::string graph6;
    std::string file;
    std::string family;
    int n = 0;

    void attach(CLI::App* cmd, bool required = true) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* b = cmd->add_option("--input", file, "file with graph6 lines or a JSON graph object");
        auto* c = cmd->add_option("--family", family, "named base graph: path|cycle|complete|star|empty")
                      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "empty"}));
        cmd->add_option("--n", n, "order for --family");
        a->excludes(b);
        a->excludes(c);
        b->excludes(c);
        if (required) cmd->callback([this, cmd]() {
            if (graph6.empty() && file.empty() && family.empty())
                throw CLI::RequiredError("one of --graph6/--input/--family");
        });
    }

    std::vector<Graph> resolve() const {
        if (!family.empty()) {
            if (n <= 0) throw std::invalid_argument("--family needs --n > 0");
            if (family == "path") return {myclab::path_graph(n)};
            if (family == "cycle") return {myclab::cycle_graph(n)};
            if (family == "complete") return {myclab::complete_graph(n)};
            if (family == "star") return {myclab::star_graph(n)};
            return {myclab::empty_graph(n)};
        }
        if (!graph6.empty()) return {myclab::from_graph6(graph6)};
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open input file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        size_t first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw std::invalid_argument("input file '" + file + "' is empty");
        if (text[first] == '{') return {myclab::graph_from_json(text)};
        std::vector<Graph> graphs;
        std::istringstream lines(text);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            try {
                graphs.push_back(myclab::from_graph6(line));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (graphs.empty()) throw std::invalid_argument("input file '" + file + "' has no graphs");
        return graphs;
    }

    Graph resolve_one() const {
        auto graphs = resolve();
        if (graphs.size() != 1)
            throw std::invalid_argument("this subcommand takes exactly one graph, got " +
                                        std::to_string(graphs.size()));
        return graphs.front();
    }
};

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

const char* family_tag(const Graph& g) {
    int n = g.order();
    if (n < 1 || n > 11) return nullptr;
    uint64_t code = myclab::canonical_code(g);
    if (code == myclab::canonical_code(myclab::complete_graph(n))) return "complete";
    if (n >= 3 && code == myclab::canonical_code(myclab::cycle_graph(n))) return "cycle";
    if (code == myclab::canonical_code(myclab::path_graph(n))) return "path";
    return nullptr;
}

// ---------------------------------------------------------------------------
// build / lambda / bound / label / verify / matching

int cmd_build(const GraphInput& gi, int t, const std::string& format) {
    Graph g = gi.resolve_one();
    myclab::MycGraph m = myclab::iterated_mycielski(g, t);
    if (format == "json") {
        emit(myclab::myc_graph_json(m));
    } else if (format == "g6") {
        std::cout << myclab::to_graph6(m.graph) << "\n";
    } else if (format == "dot") {
        std::cout << myclab::to_dot(m.graph);
    } else {  // table
        std::cout << "order\t" << m.graph.order() << "\n"
                  << "edges\t" << m.graph.edge_count() << "\n"
                  << "maxdeg\t" << (m.graph.order() ? m.graph.max_degree() : 0) << "\n";
        for (int v = 0; v < m.graph.order(); ++v)
            std::cout << v << "\t" << myclab::to_string(m.ids[v]) << "\t" << m.graph.degree(v) << "\n";
    }
    return kExitOk;
}

int cmd_lambda(const GraphInput& gi, int t, const myclab::SolverOptions& opts) {
    for (const Graph& base : gi.resolve()) {
        Graph g = t >= 1 ? myclab::iterated_mycielski(base, t).graph : base;
        myclab::LambdaResult r = myclab::lambda_exact(g, opts);
        if (r.status == myclab::SearchStatus::unknown) {
            std::cerr << "budget exhausted after " << r.nodes << " nodes; lambda in [" << r.lower << ", "
                      << r.upper << "]\n";
            return kExitBudget;
        }
        std::cout << r.value << "\n";
    }
    return kExitOk;
}

int cmd_bound(const GraphInput& gi, int t, bool conjecture, const std::string& format,
              const myclab::SolverOptions& solver) {
    myclab::BoundOptions opts;
    opts.solver = solver;
    opts.include_conjecture = conjecture;
    for (const Graph& g : gi.resolve()) {
        myclab::BoundReport rep =
            t == 1 ? myclab::bounds_for_mycielski(g, opts) : myclab::bounds_for_iterated(g, t, opts);
        if (format == "table") {
            for (const auto& e : rep.entries) {
                const char* kind = e.kind == myclab::BoundEntry::Kind::lower  ? "lower"
                                   : e.kind == myclab::BoundEntry::Kind::upper ? "upper"
                                                                               : "exact";
                std::cout << e.rule << "\t" << kind << "\t" << e.value << "\t"
                          << (e.applicable ? "applicable" : "inapplicable") << "\t" << e.note << "\n";
            }
            std::cout << "best\t[" << (rep.best_lower ? std::to_string(*rep.best_lower) : "-") << ", "
                      << (rep.best_upper ? std::to_string(*rep.best_upper) : "-") << "]\n";
        } else {
            emit(myclab::bound_report_json(rep));
        }
    }
    return kExitOk;
}

int emit_labeling(const myclab::MycLabeling& ml, const Graph& base, const std::string& method,
                  const std::string& format) {
    if (format == "table") {
        for (int v = 0; v < ml.myc.graph.order(); ++v)
            std::cout << myclab::to_string(ml.myc.ids[v]) << "\t" << ml.labeling.labels[v] << "\n";
        std::cout << "span\t" << ml.labeling.span() << "\n";
        return kExitOk;
    }
    json out = myclab::fixture_json(ml, base);
    out["method"] = method;
    emit(out);
    return kExitOk;
}

int cmd_label(const GraphInput& gi, int t, std::string method, const std::string& format,
              const myclab::SolverOptions& solver) {
    // Family shortcut: the optimal path/cycle labelings of M(G).
    if (t == 1 && !gi.family.empty() && (gi.family == "path" || gi.family == "cycle") &&
        (method == "auto" || method == "prop3.6" || method == "prop3.7")) {
        if (method == "prop3.6" && gi.family != "path")
            throw std::invalid_argument("method prop3.6 labels paths");
        if (method == "prop3.7" && gi.family != "cycle")
            throw std::invalid_argument("method prop3.7 labels cycles");
        auto fam = gi.family == "path" ? myclab::Family::path : myclab::Family::cycle;
        myclab::MycLabeling ml = myclab::label_family(fam, gi.n);
        Graph base = gi.family == "path" ? myclab::path_graph(gi.n) : myclab::cycle_graph(gi.n);
        return emit_labeling(ml, base, method == "auto" ? (gi.family == "path" ? "prop3.6" : "prop3.7") : method,
                             format);
    }

    Graph g = gi.resolve_one();
    int n = g.order();
    bool no_isolated = n > 0 && g.min_degree() >= 1;

    if (method == "auto") {
        if (t <= 1) {
            std::optional<myclab::CliquePartition> cp;
            if (n <= myclab::kCliquePartitionCeiling) cp = myclab::find_clique_partition(g);
            method = cp ? "lemma3.1" : "thm3.1";
        } else if (myclab::canonical_code(g) == myclab::canonical_code(myclab::complete_graph(n))) {
            method = "thm4.2";
        } else if (no_isolated && myclab::d2_condition(g).holds) {
            method = "thm4.7";
        } else {
            method = "thm4.8";
        }
    }

    myclab::MycLabeling ml;
    if (method == "prop3.6" || method == "prop3.7") {
        if (t != 1) throw std::invalid_argument("method " + method + " labels M(G); use --t 1");
        const char* want = method == "prop3.6" ? "path" : "cycle";
        const char* got = family_tag(g);
        if (!got || std::string(got) != want)
            throw std::invalid_argument(std::string("method ") + method + " needs a " + want + " graph");
        ml = myclab::label_family(method == "prop3.6" ? myclab::Family::path : myclab::Family::cycle, n);
    } else if (method == "thm3.1") {
        if (t != 1) throw std::invalid_argument("method thm3.1 labels M(G); use --t 1");
        myclab::LambdaResult r = myclab::lambda_exact(g, solver);
        if (r.status == myclab::SearchStatus::unknown) {
            std::cerr << "budget exhausted while solving the base graph\n";
            return kExitBudget;
        }
        ml = myclab::label_upper_shift(g, *r.witness);
    } else if (method == "lemma3.1") {
        if (t != 1) throw std::invalid_argument("method lemma3.1 labels M(G); use --t 1");
        auto cp = myclab::find_clique_partition(g);
        if (!cp) throw std::invalid_argument("no usable clique partition of the squared-complement exists");
        ml = myclab::label_clique_partition(g, *cp);
    } else if (method == "thm4.2") {
        if (t < 2) throw std::invalid_argument("method thm4.2 labels M^t(K_n) for t >= 2");
        if (myclab::canonical_code(g) != myclab::canonical_code(myclab::complete_graph(n)))
            throw std::invalid_argument("method thm4.2 needs a complete graph");
        ml = myclab::label_m2_complete(n, t);
    } else if (method == "thm4.4") {
        if (t != 2) throw std::invalid_argument("method thm4.4 labels M^2(G)");
        auto ecc = myclab::diameter_and_eccentricities(g);
        if (ecc.diameter && *ecc.diameter < 3)
            throw std::invalid_argument("method thm4.4 needs diameter >= 3");
        ml = myclab::label_m2_diam3(g);
    } else if (method == "thm4.7") {
        if (t < 2) throw std::invalid_argument("method thm4.7 labels M^t(G) for t >= 2");
        if (!no_isolated) throw std::invalid_argument("method thm4.7 needs a graph without isolated vertices");
        auto res = myclab::perfect_two_matching(myclab::complement(myclab::power(g, 2)));
        if (!res.certificate)
            throw std::invalid_argument("the squared-complement has no perfect 2-matching (D2 fails)");
        ml = myclab::label_from_two_matching(g, t, *res.certificate);
    } else if (method == "thm4.8") {
        if (t < 2) throw std::invalid_argument("method thm4.8 labels M^t(G) for t >= 2");
        ml = myclab::label_partial_two_matching(g, t);
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    return emit_labeling(ml, g, method, format);
}

int cmd_verify(const GraphInput& gi, int t, const std::string& labeling_file) {
    Graph base = gi.resolve_one();
    std::ifstream in(labeling_file);
    if (!in) throw std::invalid_argument("cannot open labeling file '" + labeling_file + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("labeling file '" + labeling_file + "': " + e.what());
    }

    Graph g = base;
    myclab::Labeling f;
    if (t >= 1) {
        myclab::MycGraph m = myclab::iterated_mycielski(base, t);
        g = m.graph;
        if (j.contains("labels") && j["labels"].is_object())
            f = myclab::labeling_from_fixture(m, j);
        else
            f = myclab::labeling_from_json(j, g.order());
    } else {
        f = myclab::labeling_from_json(j, g.order());
    }
    myclab::ValidationReport rep = myclab::validate(g, f);
    emit(myclab::validation_json(rep));
    return rep.valid ? kExitOk : kExitRefuted;
}

int cmd_matching(const GraphInput& gi, const std::string& stat, const std::string& format) {
    for (const Graph& g : gi.resolve()) {
        json out;
        out["stat"] = stat;
        if (stat == "s4") {
            auto [value, witness] = myclab::star_matching_number(g, 4);
            out["value"] = value;
            out["witness"] = myclab::star_matching_json(witness);
        } else if (stat == "nu2") {
            out["value"] = myclab::nu2(g);
            out["witness"] = myclab::certificate_json(myclab::maximum_two_matching(g));
        } else if (stat == "pv") {
            out["value"] = myclab::path_cover_number(g);
        } else {  // d2
            myclab::ConditionResult r = myclab::d2_condition(g);
            out["value"] = r.holds;
            if (!r.holds) out["violating"] = r.violating;
        }
        if (format == "table") {
            std::cout << stat << "\t" << out["value"].dump() << "\n";
        } else {
            emit(out);
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// survey: per-graph checks streamed as JSON-lines through a worker pool with
// a reorder buffer, so output order equals enumeration order.

struct SurveyOutcome {
    json row;
    bool refuted = false;
    bool budget = false;
};

int run_survey(const std::vector<Graph>& graphs, int jobs,
               const std::function<SurveyOutcome(const Graph&)>& work) {
    std::vector<std::optional<SurveyOutcome>> results(graphs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&]() {
            while (!stop.load()) {
                size_t i = next.fetch_add(1);
                if (i >= graphs.size()) break;
                SurveyOutcome out = work(graphs[i]);
                {
                    std::lock_guard<std::mutex> lock(mu);
                    results[i] = std::move(out);
                }
                cv.notify_all();
            }
        });

    bool refuted = false, budget = false;
    std::string reproducer;
    {
        std::unique_lock<std::mutex> lock(mu);
        for (size_t i = 0; i < graphs.size() && !refuted; ++i) {
            cv.wait(lock, [&]() { return results[i].has_value(); });
            const SurveyOutcome& out = *results[i];
            std::cout << out.row.dump() << "\n";
            budget |= out.budget;
            if (out.refuted) {
                refuted = true;
                reproducer = out.row.value("graph6", "");
                stop = true;
            }
        }
    }
    stop = true;
    cv.notify_all();
    for (auto& th : pool) th.join();
    std::cout.flush();
    if (refuted) {
        std::cerr << "refuted; reproduce with: myclab survey --graph6 '" << reproducer << "'\n";
        return kExitRefuted;
    }
    return budget ? kExitBudget : kExitOk;
}

std::vector<Graph> enumeration(int n_min, int n_max, bool connected_only) {
    std::vector<Graph> graphs;
    for (int n = n_min; n <= n_max; ++n)
        for (const Graph& g : myclab::all_graphs(n, connected_only)) graphs.push_back(g);
    return graphs;
}

json base_row(const Graph& g, const std::string& check) {
    json row;
    row["check"] = check;
    row["graph6"] = myclab::to_graph6(g);
    row["n"] = g.order();
    const char* fam = family_tag(g);
    row["family"] = fam ? json(fam) : json(nullptr);
    return row;
}

SurveyOutcome check_thm34(const Graph& g, const myclab::SolverOptions& opts) {
    SurveyOutcome out;
    out.row = base_row(g, "thm3.4");
    int n = g.order();
    myclab::MycGraph m = myclab::mycielski(g);
    myclab::LambdaResult r = myclab::lambda_exact(m.graph, opts);
    if (r.status == myclab::SearchStatus::unknown) {
        out.row["verdict"] = "skipped";
        out.row["reason"] = "budget";
        out.budget = true;
        return out;
    }
    int i4c = myclab::i4(myclab::complement(g));
    out.row["lambda_mycielski"] = r.value;
    out.row["i4_complement"] = i4c;
    bool ok = (r.value <= 2 * n) == (i4c <= 4);
    if (i4c >= 5) ok = ok && r.value == 2 * n + (i4c + 1) / 2 - 2;
    if (r.value > 2 * n) ok = ok && (i4c + 1) / 2 == (r.value - 2 * n) + 2;
    out.row["verdict"] = ok ? "confirmed" : "refuted";
    out.refuted = !ok;
    return out;
}

SurveyOutcome check_cor36(const Graph& g, const myclab::SolverOptions& opts) {
    SurveyOutcome out;
    out.row = base_row(g, "cor3.6");
    myclab::LambdaResult r = myclab::lambda_exact(myclab::mycielski(g).graph, opts);
    if (r.status == myclab::SearchStatus::unknown) {
        out.row["verdict"] = "skipped";
        out.row["reason"] = "budget";
        out.budget = true;
        return out;
    }
    out.row["lambda_mycielski"] = r.value;

    struct Named {
        const char* tag;
        Graph graph;
        int value;
    };
    static const std::vector<Named> named = [] {
        std::vector<Named> v;
        v.push_back({"K2", myclab::complete_graph(2), 4});
        v.push_back({"P3", myclab::path_graph(3), 6});
        v.push_back({"P4", myclab::path_graph(4), 6});
        v.push_back({"C3", myclab::cycle_graph(3), 6});
        v.push_back({"P5", myclab::path_graph(5), 7});
        v.push_back({"P6", myclab::path_graph(6), 7});
        v.push_back({"C6", myclab::cycle_graph(6), 7});
        return v;
    }();

    const Named* hit = nullptr;
    for (const auto& cand : named)
        if (cand.graph.order() == g.order() &&
            myclab::canonical_code(cand.graph) == myclab::canonical_code(g)) {
            hit = &cand;
            break;
        }
    out.row["member"] = hit ? json(hit->tag) : json(nullptr);
    bool ok = hit ? r.value == hit->value : (r.value != 4 && r.value != 6 && r.value != 7);
    out.row["verdict"] = ok ? "confirmed" : "refuted";
    out.refuted = !ok;
    return out;
}

SurveyOutcome check_thm44(const Graph& g, const myclab::SolverOptions& opts) {
    SurveyOutcome out;
    out.row = base_row(g, "thm4.4");
    int n = g.order();
    long target = 4L * (n + 1) - 2;
    bool complete = myclab::canonical_code(g) == myclab::canonical_code(myclab::complete_graph(n));
    auto ecc = myclab::diameter_and_eccentricities(g);
    bool diam2 = ecc.diameter && *ecc.diameter == 2;
    // lambda(M^2) <= target always; equality holds exactly when target-1 fails.
    myclab::FeasibilityResult fr =
        myclab::is_span_feasible(myclab::iterated_mycielski(g, 2).graph, static_cast<int>(target) - 1, opts);
    if (fr.status == myclab::SearchStatus::unknown) {
        out.row["verdict"] = "skipped";
        out.row["reason"] = "budget";
        out.budget = true;
        return out;
    }
    bool attains = fr.status == myclab::SearchStatus::infeasible;
    out.row["target"] = target;
    out.row["attains_maximum"] = attains;
    out.row["complete"] = complete;
    out.row["diameter"] = ecc.diameter ? json(*ecc.diameter) : json(nullptr);
    bool ok = attains == (complete || diam2);
    out.row["verdict"] = ok ? "confirmed" : "refuted";
    out.refuted = !ok;
    return out;
}

SurveyOutcome check_thm47(const Graph& g, const myclab::SolverOptions& opts) {
    SurveyOutcome out;
    out.row = base_row(g, "thm4.7");
    int n = g.order();
    long target = 2L * (n + 2) - 2;
    bool d2 = myclab::d2_condition(g).holds;
    // target is also the t=2 lower bound, so feasibility there means equality.
    myclab::FeasibilityResult fr =
        myclab::is_span_feasible(myclab::iterated_mycielski(g, 2).graph, static_cast<int>(target), opts);
    if (fr.status == myclab::SearchStatus::unknown) {
        out.row["verdict"] = "skipped";
        out.row["reason"] = "budget";
        out.budget = true;
        return out;
    }
    bool feasible = fr.status == myclab::SearchStatus::feasible;
    out.row["target"] = target;
    out.row["feasible"] = feasible;
    out.row["d2_condition"] = d2;
    out.row["verdict"] = feasible == d2 ? "confirmed" : "refuted";
    out.refuted = feasible != d2;
    return out;
}

SurveyOutcome check_cor45(const Graph& g, int t, const myclab::SolverOptions& opts) {
    SurveyOutcome out;
    out.row = base_row(g, "cor4.5");
    int n = g.order();
    long lower = (1L << (t - 1)) * std::max(n + 2, 2 * (g.max_degree() + 2)) - 2;
    // Diameter <= 2 propagates to M^t, where all vertices need distinct labels.
    auto ecc = myclab::diameter_and_eccentricities(g);
    if (ecc.diameter && *ecc.diameter <= 2) lower = std::max(lower, myclab::iterated_order(n, t) - 1);
    out.row["t"] = t;
    out.row["lower"] = lower;

    auto iso = [&](const Graph& h) {
        return h.order() == n && myclab::canonical_code(h) == myclab::canonical_code(g);
    };
    bool is_k2 = iso(myclab::complete_graph(2));
    bool in_mid = false;
    for (int k = 3; k <= 6; ++k) in_mid = in_mid || iso(myclab::path_graph(k));
    in_mid = in_mid || iso(myclab::cycle_graph(3)) || iso(myclab::cycle_graph(6));
    bool in_seven = iso(myclab::path_graph(7)) || iso(myclab::cycle_graph(7));

    // Positive feasibility comes cheap from the constructive labeler; the
    // branch-and-bound solver is only a fallback.
    bool construction_tried = false;
    std::optional<long> constructive_span;
    std::optional<Graph> m2;  // built lazily, only when a target is reachable
    auto feasible = [&](long k) -> std::optional<bool> {
        if (k > myclab::kMaxSolverSpan) return std::nullopt;
        if (!construction_tried) {
            construction_tried = true;
            try {
                constructive_span = myclab::label_partial_two_matching(g, t).labeling.span();
            } catch (const std::exception&) {
            }
        }
        if (constructive_span && *constructive_span <= k) return true;
        if (!m2) m2 = myclab::iterated_mycielski(g, t).graph;
        myclab::FeasibilityResult fr = myclab::is_span_feasible(*m2, static_cast<int>(k), opts);
        if (fr.status == myclab::SearchStatus::unknown) return std::nullopt;
        return fr.status == myclab::SearchStatus::feasible;
    };
    // lambda == target, decided via the closed-form lower bound plus at most
    // two feasibility calls.
    auto equals = [&](long target) -> std::optional<bool> {
        if (lower > target) return false;
        auto at = feasible(target);
        if (!at) return std::nullopt;
        if (!*at) return false;
        if (lower == target) return true;
        auto below = feasible(target - 1);
        if (!below) return std::nullopt;
        return !*below;
    };

    struct Case {
        long target;
        bool member;
        const char* key;
    };
    const Case cases[] = {
        {3L * (1L << t) - 2, is_k2, "k2"},
        {4L * (1L << t) - 2, in_mid, "p3..p6_c3_c6"},
        {9L * (1L << (t - 1)) - 2, in_seven, "p7_c7"},
    };
    bool ok = true;
    for (const Case& c : cases) {
        auto eq = equals(c.target);
        if (!eq) {
            out.row["verdict"] = "skipped";
            out.row["reason"] = "budget";
            out.budget = true;
            return out;
        }
        out.row[std::string("equals_") + c.key] = *eq;
        ok = ok && (*eq == c.member);
    }
    out.row["verdict"] = ok ? "confirmed" : "refuted";
    out.refuted = !ok;
    return out;
}

SurveyOutcome check_distance_lemmas(const Graph& g, int t_max) {
    SurveyOutcome out;
    out.row = base_row(g, "distance-lemmas");
    out.row["t_max"] = t_max;
    for (int t = 1; t <= t_max; ++t) {
        myclab::MycGraph m = myclab::iterated_mycielski(g, t);
        if (auto bad = myclab::structural_discrepancy(g, m)) {
            out.row["verdict"] = "refuted";
            out.row["t"] = t;
            out.row["discrepancy"] = *bad;
            out.refuted = true;
            return out;
        }
    }
    out.row["verdict"] = "confirmed";
    return out;
}

SurveyOutcome check_hamiltonicity(const Graph& g) {
    SurveyOutcome out;
    out.row = base_row(g, "hamiltonicity");
    int n = g.order();
    myclab::MycGraph m = myclab::iterated_mycielski(g, 2);

    // Explicit spanning cycle of the complement of M^2(g): every consecutive
    // pair below (wrapping around) must be non-adjacent in M^2(g).
    std::vector<int> order;
    order.push_back(m.base(1, 0));
    order.push_back(m.base(1, 1));
    for (int i = 2; i <= n; ++i) {
        if (i % 2 == 1) {
            order.push_back(m.base(i, 2));
            order.push_back(m.base(i, 0));
            order.push_back(m.base(i, 1));
        } else {
            order.push_back(m.base(i, 1));
            order.push_back(m.base(i, 0));
            order.push_back(m.base(i, 2));
        }
    }
    for (int i = n; i >= 1; --i) order.push_back(m.base(i, 3));
    order.push_back(m.base(1, 2));
    order.push_back(m.root(1, 1));
    order.push_back(m.root(1, 0));
    order.push_back(m.root(2, 0));

    bool ok = static_cast<int>(order.size()) == m.graph.order();
    std::string detail;
    if (!ok) detail = "cycle does not span M^2";
    for (size_t i = 0; ok && i < order.size(); ++i) {
        int u = order[i], v = order[(i + 1) % order.size()];
        if (m.graph.adjacent(u, v)) {
            ok = false;
            detail = "adjacent pair " + myclab::to_string(m.ids[u]) + " " + myclab::to_string(m.ids[v]);
        }
    }
    out.row["verdict"] = ok ? "confirmed" : "refuted";
    if (!ok) out.row["discrepancy"] = detail;
    out.refuted = !ok;
    return out;
}

int cmd_survey(const std::string& check, int n_max, int t, int jobs, const GraphInput& gi,
               const myclab::SolverOptions& opts) {
    std::vector<Graph> graphs;
    bool explicit_input = !gi.graph6.empty() || !gi.file.empty() || !gi.family.empty();
    std::function<SurveyOutcome(const Graph&)> work;

    if (check == "thm3.4") {
        if (n_max <= 0) n_max = 5;
        graphs = explicit_input ? gi.resolve() : enumeration(1, n_max, false);
        work = [&](const Graph& g) { return check_thm34(g, opts); };
    } else if (check == "cor3.6") {
        if (n_max <= 0) n_max = 6;
        graphs = explicit_input ? gi.resolve() : enumeration(1, n_max, true);
        work = [&](const Graph& g) { return check_cor36(g, opts); };
    } else if (check == "thm4.4") {
        if (n_max <= 0) n_max = 4;
        graphs = explicit_input ? gi.resolve() : enumeration(2, n_max, true);
        work = [&](const Graph& g) { return check_thm44(g, opts); };
    } else if (check == "thm4.7") {
        if (n_max <= 0) n_max = 4;
        graphs = explicit_input ? gi.resolve() : enumeration(2, n_max, true);
        work = [&](const Graph& g) { return check_thm47(g, opts); };
    } else if (check == "cor4.5") {
        if (n_max <= 0) n_max = 7;
        if (t < 2) t = 2;
        graphs = explicit_input ? gi.resolve() : enumeration(2, n_max, true);
        work = [&, t](const Graph& g) { return check_cor45(g, t, opts); };
    } else if (check == "distance-lemmas") {
        if (n_max <= 0) n_max = 5;
        if (t < 1) t = 2;
        graphs = explicit_input ? gi.resolve() : enumeration(1, n_max, false);
        work = [t](const Graph& g) { return check_distance_lemmas(g, t); };
    } else if (check == "hamiltonicity") {
        if (n_max <= 0) n_max = 5;
        graphs = explicit_input ? gi.resolve() : enumeration(2, n_max, false);
        work = [](const Graph& g) { return check_hamiltonicity(g); };
    } else {
        throw std::invalid_argument("unknown check '" + check + "'");
    }
    return run_survey(graphs, jobs, work);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mycielski L(2,1)-labeling laboratory"};
    app.require_subcommand(1);

    uint64_t budget = 0;
    app.add_option("--budget", budget, "search node budget (MYCLAB_BUDGET overrides)");

    // build
    auto* build = app.add_subcommand("build", "construct M^t(G) and export it");
    GraphInput build_in;
    build_in.attach(build);
    int build_t = 1;
    std::string build_format = "json";
    build->add_option("--mycielski,--t", build_t, "iteration count t >= 0")->check(CLI::Range(0, 30));
    build->add_option("--format", build_format)->check(CLI::IsMember({"json", "dot", "g6", "table"}));

    // lambda
    auto* lambda = app.add_subcommand("lambda", "exact L(2,1) span");
    GraphInput lambda_in;
    lambda_in.attach(lambda);
    int lambda_t = 0;
    lambda->add_option("--mycielski", lambda_t, "solve M^t(G) instead of G")->check(CLI::Range(0, 30));

    // bound
    auto* bound = app.add_subcommand("bound", "theorem-derived bound report for lambda(M^t(G))");
    GraphInput bound_in;
    bound_in.attach(bound);
    int bound_t = 1;
    bool bound_conjecture = false;
    std::string bound_format = "json";
    bound->add_option("--t", bound_t, "iteration count t >= 1")->check(CLI::Range(1, 30));
    bound->add_flag("--conjecture", bound_conjecture, "include the flagged conjectural upper bound");
    bound->add_option("--format", bound_format)->check(CLI::IsMember({"json", "table"}));

    // label
    auto* label = app.add_subcommand("label", "constructive labeling of M^t(G)");
    GraphInput label_in;
    label_in.attach(label);
    int label_t = 1;
    std::string label_method = "auto";
    std::string label_format = "json";
    label->add_option("--t", label_t, "iteration count t >= 1")->check(CLI::Range(1, 30));
    label->add_option("--method", label_method)
        ->check(CLI::IsMember(
            {"auto", "prop3.6", "prop3.7", "thm3.1", "lemma3.1", "thm4.2", "thm4.4", "thm4.7", "thm4.8"}));
    label->add_option("--format", label_format)->check(CLI::IsMember({"json", "table"}));

    // verify
    auto* verify = app.add_subcommand("verify", "validate a labeling file against G or M^t(G)");
    GraphInput verify_in;
    verify_in.attach(verify);
    int verify_t = 0;
    std::string verify_labeling;
    verify->add_option("--mycielski", verify_t, "validate against M^t(G)")->check(CLI::Range(0, 30));
    verify->add_option("--labeling", verify_labeling, "labeling JSON file")->required();

    // matching
    auto* matching = app.add_subcommand("matching", "matching statistics of G");
    GraphInput matching_in;
    matching_in.attach(matching);
    std::string matching_stat;
    std::string matching_format = "json";
    matching->add_option("--stat", matching_stat, "s4 | nu2 | pv | d2")
        ->required()
        ->check(CLI::IsMember({"s4", "nu2", "pv", "d2"}));
    matching->add_option("--format", matching_format)->check(CLI::IsMember({"json", "table"}));

    // survey
    auto* survey = app.add_subcommand("survey", "exhaustive theorem checks over small graphs (JSON-lines)");
    GraphInput survey_in;
    survey_in.attach(survey, /*required=*/false);
    std::string survey_check;
    int survey_nmax = 0;
    int survey_t = 0;
    int survey_jobs = static_cast<int>(std::thread::hardware_concurrency());
    survey->add_option("--check", survey_check)
        ->required()
        ->check(CLI::IsMember(
            {"thm3.4", "thm4.4", "thm4.7", "cor3.6", "cor4.5", "distance-lemmas", "hamiltonicity"}));
    survey->add_option("--n-max", survey_nmax, "largest base order (0 = per-check default)");
    survey->add_option("--t", survey_t, "iteration count where the check allows one");
    survey->add_option("--jobs", survey_jobs, "worker threads")->check(CLI::Range(1, 256));

    CLI11_PARSE(app, argc, argv);

    try {
        myclab::SolverOptions opts = solver_options(budget);
        if (build->parsed()) return cmd_build(build_in, build_t, build_format);
        if (lambda->parsed()) return cmd_lambda(lambda_in, lambda_t, opts);
        if (bound->parsed()) return cmd_bound(bound_in, bound_t, bound_conjecture, bound_format, opts);
        if (label->parsed()) return cmd_label(label_in, label_t, label_method, label_format, opts);
        if (verify->parsed()) return cmd_verify(verify_in, verify_t, verify_labeling);
        if (matching->parsed()) return cmd_matching(matching_in, matching_stat, matching_format);
        if (survey->parsed()) return cmd_survey(survey_check, survey_nmax, survey_t, survey_jobs, survey_in, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
