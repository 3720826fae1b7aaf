#include "crn/cone_pipeline.hpp"

#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

std::vector<QVector> stoichiometric_basis(const ReactionNetwork& net) {
  std::vector<QVector> basis;
  for (auto j : independent_columns(net.gamma)) basis.push_back(net.gamma.column(j));
  return basis;
}

namespace {

FamilyRequest from_report(const ClassificationReport& report) {
  switch (report.cone_family) {
    case ConeFamily::cross_polytope:
    case ConeFamily::simplex:
      return FamilyRequest::type_c;
    case ConeFamily::cube:
      return FamilyRequest::cube;
    case ConeFamily::subset_sum:
      return FamilyRequest::subset_sum;
    default:
      throw std::invalid_argument("no cone family applies to this network");
  }
}

}  // namespace

ConeConstruction construct_cone(const ReactionNetwork& net, const ClassificationReport& report, FamilyRequest family,
                                bool build_ball, const FacetOptions& opts) {
  if (!report.factorization) throw std::invalid_argument("network has no PND factorization");
  const PNDFactorization& f = *report.factorization;
  if (family == FamilyRequest::automatic) family = from_report(report);

  ConeConstruction out;
  out.P = f.P;
  switch (family) {
    case FamilyRequest::type_c:
      out.reduced = reduced_network(net, f, true);
      out.set = type_c_viable_set(out.reduced);
      break;
    case FamilyRequest::cube:
      out.reduced = reduced_network(net, f, false);
      out.set = cubical_viable_set(out.reduced);
      break;
    case FamilyRequest::subset_sum:
      out.reduced = reduced_network(net, f, false);
      out.set = subset_sum_viable_set(out.reduced);
      break;
    case FamilyRequest::automatic:
      break;
  }
  if (!out.reduced.all_reversible()) {
    bool used = false;
    for (const auto& step : out.set.closure_log) used = used || !out.reduced.reversible[step.reaction];
    if (used || out.set.closure_log.empty())
      out.notes.push_back("irreversible reactions participate in the viable-set construction");
  }
  out.reduced_cone = lift_viable_set(out.set, &out.symmetrized);
  if (out.symmetrized) out.notes.push_back("0 is an extreme point of the viable set; the cone lifts M' and -M'");
  out.reduced_duals = dual_generators(out.reduced_cone, opts);
  if (!out.reduced_cone.facet_hint.empty() && !out.reduced_duals.from_family_structure)
    out.notes.push_back("family facet hint rejected; facets recomputed by double description");
  out.cone = apply_P(out.reduced_cone, f.P);
  out.duals = apply_P(out.reduced_duals, f.P);
  if (build_ball) out.ball = norm_ball(out.cone, stoichiometric_basis(net));
  return out;
}

}  // namespace crn
