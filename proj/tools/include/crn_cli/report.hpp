#pragma once

#include <string>

#include "json.hpp"

#include "crn/cone_pipeline.hpp"
#include "crn/factorize.hpp"
#include "crn/graphs.hpp"
#include "crn/verify.hpp"

namespace crn::cli {

using nlohmann::ordered_json;

ordered_json to_json(const QMatrix& m);
ordered_json to_json(const QVector& v);
ordered_json to_json(const std::vector<QVector>& vs);

ordered_json network_json(const ReactionNetwork& net);
// {"factorizable", "stage"?, "detail"?, "P", "N", "D", "n_class"?}
ordered_json factorization_json(const ClassificationReport& report);
ordered_json classification_json(const ReactionNetwork& net, const ClassificationReport& report);
ordered_json graph_json(const SignedGraph& g, const ReactionNetwork& net);
ordered_json graph_json(const Digraph& g, const ReactionNetwork& net, bool bipartite);
ordered_json cone_json(const ConeConstruction& cc, bool emit_ball);
ordered_json monotonicity_json(const MonotonicityReport& r);
ordered_json contractivity_json(const ContractivityReport& r);
ordered_json convergence_json(const ConvergenceReport& r);
ordered_json witnesses_json(const std::variant<WitnessTable, WitnessFailure>& w);

// Indented "key: value" rendering of a report.
std::string pretty(const ordered_json& j);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace crn::cli
