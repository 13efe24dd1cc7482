#include "myclab/serialize.hpp"

#include <stdexcept>

namespace myclab {

json graph_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

json labeling_json(const Labeling& f) {
    json j;
    j["labels"] = f.labels;
    j["span"] = f.span();
    return j;
}

Labeling labeling_from_json(const json& j, int expected_order) {
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw std::invalid_argument("labeling JSON: need object with a \"labels\" array");
    Labeling f;
    for (const auto& l : j["labels"]) f.labels.push_back(l.get<int>());
    if (static_cast<int>(f.labels.size()) != expected_order)
        throw std::invalid_argument("labeling JSON: got " + std::to_string(f.labels.size()) + " labels for a graph of order " +
                                    std::to_string(expected_order));
    return f;
}

json myc_graph_json(const MycGraph& m) {
    json j = graph_json(m.graph);
    j["t"] = m.t;
    j["base_order"] = m.base_order;
    j["ids"] = json::array();
    for (const auto& id : m.ids) j["ids"].push_back(to_string(id));
    return j;
}

json validation_json(const ValidationReport& rep) {
    json j;
    j["valid"] = rep.valid;
    j["violations"] = json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"u", v.u}, {"v", v.v}, {"distance", v.distance}, {"gap", v.gap}, {"required", v.required}});
    return j;
}

json bound_report_json(const BoundReport& rep) {
    json j;
    j["entries"] = json::array();
    for (const auto& e : rep.entries) {
        const char* kind = e.kind == BoundEntry::Kind::lower ? "lower"
                           : e.kind == BoundEntry::Kind::upper ? "upper" : "exact";
        j["entries"].push_back({{"kind", kind}, {"value", e.value}, {"rule", e.rule}, {"applicable", e.applicable}, {"note", e.note}});
    }
    j["best_lower"] = rep.best_lower ? json(*rep.best_lower) : json(nullptr);
    j["best_upper"] = rep.best_upper ? json(*rep.best_upper) : json(nullptr);
    return j;
}

json certificate_json(const TwoMatchingCertificate& cert) {
    json j;
    j["edges"] = json::array();
    for (auto [u, v] : cert.edge_components) j["edges"].push_back({u, v});
    j["cycles"] = json::array();
    for (const auto& c : cert.cycle_components) j["cycles"].push_back(c);
    return j;
}

json star_matching_json(const StarMatching& sm) {
    json j;
    j["stars"] = json::array();
    for (const auto& s : sm.stars) j["stars"].push_back({{"center", s.center}, {"leaves", s.leaves}});
    return j;
}

json fixture_json(const MycLabeling& ml, const Graph& base) {
    json j;
    j["graph"] = graph_json(base);
    j["t"] = ml.myc.t;
    json labels = json::object();
    for (int v = 0; v < ml.myc.graph.order(); ++v) labels[to_string(ml.myc.ids[v])] = ml.labeling.labels[v];
    j["labels"] = labels;
    j["span"] = ml.labeling.span();
    return j;
}

Labeling labeling_from_fixture(const MycGraph& myc, const json& fixture) {
    if (!fixture.contains("labels") || !fixture["labels"].is_object())
        throw std::invalid_argument("fixture JSON: need a \"labels\" object keyed by vertex ids");
    Labeling f;
    f.labels.assign(myc.graph.order(), -1);
    for (const auto& [key, value] : fixture["labels"].items())
        f.labels[myc.index_of(parse_vertex_id(key))] = value.get<int>();
    for (int v = 0; v < myc.graph.order(); ++v)
        if (f.labels[v] < 0)
            throw std::invalid_argument("fixture JSON: no label for " + to_string(myc.ids[v]));
    return f;
}

}  // namespace myclab
