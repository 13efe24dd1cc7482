#ifndef MYCLAB_SERIALIZE_HPP
#define MYCLAB_SERIALIZE_HPP

#include "json.hpp"

#include "myclab/bounds.hpp"
#include "myclab/l21.hpp"
#include "myclab/labelers.hpp"
#include "myclab/matching.hpp"
#include "myclab/mycielski.hpp"

namespace myclab {

using json = nlohmann::ordered_json;

json graph_json(const Graph& g);
json labeling_json(const Labeling& f);
Labeling labeling_from_json(const json& j, int expected_order);
json myc_graph_json(const MycGraph& m);  // graph plus the parallel id-string array
json validation_json(const ValidationReport& rep);
json bound_report_json(const BoundReport& rep);
json certificate_json(const TwoMatchingCertificate& cert);
json star_matching_json(const StarMatching& sm);

// Figure fixture: {"graph": {...}, "labels": {"v1^0": 4, ...}, "span": s}.
json fixture_json(const MycLabeling& ml, const Graph& base);
Labeling labeling_from_fixture(const MycGraph& myc, const json& fixture);

}  // namespace myclab

#endif
