#include "crn_cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace crn::cli {

ordered_json to_json(const QVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json to_json(const QMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

ordered_json to_json(const std::vector<QVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

namespace {

ordered_json names(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  ordered_json a = ordered_json::array();
  for (auto i : idx) a.push_back(labels[i]);
  return a;
}

}  // namespace

ordered_json network_json(const ReactionNetwork& net) {
  ordered_json j;
  j["species"] = net.species;
  ordered_json rs = ordered_json::array();
  for (std::size_t r = 0; r < net.m(); ++r) {
    ordered_json x;
    x["name"] = net.reaction_names[r];
    x["reversible"] = static_cast<bool>(net.reversible[r]);
    x["stoich"] = to_json(net.gamma.column(r));
    if (net.kf[r]) x["kf"] = *net.kf[r];
    if (net.kr[r]) x["kr"] = *net.kr[r];
    rs.push_back(std::move(x));
  }
  j["reactions"] = std::move(rs);
  j["gamma"] = to_json(net.gamma);
  j["non_catalytic"] = is_non_catalytic(net);
  return j;
}

ordered_json factorization_json(const ClassificationReport& report) {
  ordered_json j;
  j["factorizable"] = report.factorizable;
  if (report.failure) {
    j["stage"] = report.failure->stage;
    j["detail"] = report.failure->detail;
  }
  if (report.factorization) {
    const auto& f = *report.factorization;
    j["P"] = to_json(f.P);
    j["N"] = to_json(f.N);
    j["D"] = to_json(f.D);
    j["n_class"] = to_string(f.n_class);
    ordered_json blocks = ordered_json::array();
    for (const auto& b : f.partition.blocks) blocks.push_back(b);
    j["row_blocks"] = std::move(blocks);
  }
  return j;
}

ordered_json classification_json(const ReactionNetwork& net, const ClassificationReport& report) {
  ordered_json j;
  j["species"] = net.n();
  j["reactions"] = net.m();
  j["factorization"] = factorization_json(report);
  ordered_json flags;
  flags["type_C"] = report.flags.type_C;
  flags["cubical"] = report.flags.cubical;
  flags["type_I_core"] = report.flags.type_I_core;
  flags["type_A"] = report.flags.type_A;
  flags["aligned_rows_le2"] = report.flags.aligned_rows_le2;
  flags["aligned_cols_le2"] = report.flags.aligned_cols_le2;
  j["flags"] = std::move(flags);
  j["cone_family"] = to_string(report.cone_family);
  j["ri_strongly_connected"] = report.ri_strongly_connected;
  j["r_graph_connected"] = report.r_graph_connected;
  j["non_catalytic"] = report.non_catalytic;
  j["theorem1_applies"] = report.theorem1_applies;
  ordered_json reasons = ordered_json::array();
  if (!report.factorizable) reasons.push_back("not_factorizable");
  if (!report.non_catalytic) reasons.push_back("non_catalytic");
  if (!report.ri_strongly_connected) reasons.push_back("ri_graph_not_strongly_connected");
  j["reasons"] = std::move(reasons);
  j["notes"] = report.notes;
  return j;
}

ordered_json graph_json(const SignedGraph& g, const ReactionNetwork& net) {
  ordered_json j;
  j["kind"] = "r";
  j["nodes"] = net.reaction_names;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json x;
    x["a"] = net.reaction_names[e.a];
    x["b"] = net.reaction_names[e.b];
    x["sign"] = to_string(e.sign);
    x["same_sign_species"] = names(e.same_sign_species, net.species);
    x["opposite_sign_species"] = names(e.opposite_sign_species, net.species);
    edges.push_back(std::move(x));
  }
  j["edges"] = std::move(edges);
  j["connected"] = g.connected();
  j["signed_loop_property"] = signed_loop_property(g);
  return j;
}

ordered_json graph_json(const Digraph& g, const ReactionNetwork& net, bool bipartite) {
  std::vector<std::string> labels;
  if (bipartite) labels = net.species;
  labels.insert(labels.end(), net.reaction_names.begin(), net.reaction_names.end());
  ordered_json j;
  j["kind"] = bipartite ? "bipartite" : "ri";
  j["nodes"] = labels;
  ordered_json adj = ordered_json::object();
  for (std::size_t u = 0; u < g.nodes; ++u) adj[labels[u]] = names(g.out[u], labels);
  j["adjacency"] = std::move(adj);
  j["scc_count"] = scc_count(g);
  j["strongly_connected"] = strongly_connected(g);
  return j;
}

ordered_json cone_json(const ConeConstruction& cc, bool emit_ball) {
  ordered_json j;
  j["family"] = to_string(cc.set.family);
  j["reduced_species"] = cc.reduced.species;
  j["viable_set"] = to_json(cc.set.vectors);
  j["closure_steps"] = cc.set.closure_log.size();
  j["symmetrized"] = cc.symmetrized;
  j["generators"] = to_json(cc.cone.generators);
  j["dual_generators"] = to_json(cc.duals.generators);
  j["duals_from_family_structure"] = cc.duals.from_family_structure;
  j["extreme_rays"] = cc.duals.extreme_rays;
  ordered_json inc = ordered_json::array();
  for (const auto& row : cc.duals.incidence) inc.push_back(row);
  j["incidence"] = std::move(inc);
  if (emit_ball && cc.ball) {
    ordered_json b;
    b["subspace_basis"] = to_json(cc.ball->subspace_basis);
    b["anchor"] = to_json(cc.ball->anchor);
    b["slice_vertices"] = to_json(cc.ball->slice_vertices);
    b["slice_centrally_symmetric"] = cc.ball->slice_centrally_symmetric;
    b["vertices"] = to_json(cc.ball->vertices);
    j["norm_ball"] = std::move(b);
  }
  j["notes"] = cc.notes;
  return j;
}

ordered_json monotonicity_json(const MonotonicityReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["pairs"] = r.pairs;
  j["min_pairing"] = r.min_pairing;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed();
  return j;
}

ordered_json contractivity_json(const ContractivityReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["margin_factor"] = r.margin_factor;
  j["pairs"] = r.pairs.size();
  j["discarded"] = r.discarded;
  std::size_t nonexp = 0, strict = 0;
  double worst_increase = 0.0, worst_ratio = 0.0;
  ordered_json series = ordered_json::array();
  for (const auto& p : r.pairs) {
    nonexp += p.nonexpansive;
    strict += p.strictly_decreasing_overall;
    worst_increase = std::max(worst_increase, p.max_increase);
    worst_ratio = std::max(worst_ratio, p.gauge_distance.back() / p.gauge_distance.front());
    ordered_json s;
    s["x0"] = p.x0;
    s["y0"] = p.y0;
    s["gauge_distance"] = p.gauge_distance;
    s["euclidean_distance"] = p.euclidean_distance;
    s["nonexpansive"] = p.nonexpansive;
    s["strictly_decreasing_overall"] = p.strictly_decreasing_overall;
    series.push_back(std::move(s));
  }
  j["nonexpansive"] = nonexp;
  j["strictly_decreasing_overall"] = strict;
  j["max_increase"] = worst_increase;
  j["max_final_to_initial_ratio"] = worst_ratio;
  j["max_conservation_drift"] = r.max_conservation_drift;
  j["passed"] = r.passed();
  j["series"] = std::move(series);
  return j;
}

ordered_json convergence_json(const ConvergenceReport& r) {
  ordered_json j;
  j["compact"] = r.compact;
  if (!r.skipped_reason.empty()) j["skipped_reason"] = r.skipped_reason;
  j["seed"] = r.seed;
  j["T"] = r.T;
  j["dt"] = r.dt;
  j["starts"] = r.terminal_states.size();
  j["conserved_totals"] = to_json(r.conserved_totals);
  j["diameter"] = r.diameter;
  j["residual"] = r.residual;
  j["diameter_tol"] = r.diameter_tol;
  j["residual_tol"] = r.residual_tol;
  j["max_conservation_drift"] = r.max_conservation_drift;
  if (!r.terminal_states.empty()) j["equilibrium"] = r.terminal_states.front();
  j["passed"] = r.passed();
  return j;
}

ordered_json witnesses_json(const std::variant<WitnessTable, WitnessFailure>& w) {
  ordered_json j;
  const WitnessTable& t = std::holds_alternative<WitnessTable>(w) ? std::get<WitnessTable>(w)
                                                                   : std::get<WitnessFailure>(w).partial;
  j["faces"] = t.face_count;
  j["covered"] = t.witnesses.size();
  j["complete"] = std::holds_alternative<WitnessTable>(w);
  if (auto* f = std::get_if<WitnessFailure>(&w)) {
    ordered_json u = ordered_json::array();
    for (const auto& face : f->uncovered) u.push_back(face);
    j["uncovered"] = std::move(u);
  }
  return j;
}

namespace {

bool scalar_array(const ordered_json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const ordered_json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, depth + 1, out);
    } else if (v.is_array() && !scalar_array(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& row : v) {
        if (row.is_object()) {
          out << pad << "  -\n";
          render(row, depth + 2, out);
        } else {
          out << pad << "  " << (row.is_array() && scalar_array(row) ? "[" : "");
          if (row.is_array() && scalar_array(row)) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << scalar(row[i]);
            out << "]\n";
          } else {
            out << row.dump() << "\n";
          }
        }
      }
    } else if (v.is_array()) {
      out << pad << it.key() << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "]\n";
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string pretty(const ordered_json& j) {
  std::ostringstream out;
  if (j.is_object())
    render(j, 0, out);
  else
    out << j.dump(2) << "\n";
  return out.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace crn::cli
