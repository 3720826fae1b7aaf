#include "crn_cli/pipeline.hpp"

#include <algorithm>

namespace crn::cli {

namespace {

constexpr double kDriftTol = 1e-8;

}  // namespace

KineticsSpec kinetics_for(const ReactionNetwork& net, const VerifyOptions& opt, std::size_t k) {
  if (opt.stated_rates) return KineticsSpec::from_network(net);
  return KineticsSpec::random(net, opt.seed + k);
}

VerifyOutcome verify_network(const ReactionNetwork& net, const VerifyOptions& opt) {
  VerifyOutcome out;
  ordered_json& j = out.report;
  ClassificationReport rep = classify(net);
  j["classification"] = {{"factorizable", rep.factorizable},
                         {"cone_family", to_string(rep.cone_family)},
                         {"theorem1_applies", rep.theorem1_applies}};
  ordered_json seeds;
  seeds["master"] = opt.seed;
  ordered_json kseeds = ordered_json::array();
  const std::size_t nk = opt.stated_rates ? 1 : opt.kinetic_seeds;
  for (std::size_t k = 0; k < nk; ++k) kseeds.push_back(opt.stated_rates ? ordered_json("stated") : ordered_json(opt.seed + k));
  seeds["kinetics"] = std::move(kseeds);
  j["seeds"] = std::move(seeds);
  j["tolerances"] = {{"monotonicity", 1e-9},     {"nonexpansive", 1e-9}, {"margin_factor", 1e-6},
                     {"cluster_diameter", 1e-5}, {"residual", 1e-8},     {"conservation_drift", kDriftTol}};
  j["parameters"] = {{"states", opt.states},
                     {"pairs", opt.pairs},
                     {"t_final", opt.t_final},
                     {"dt", opt.dt},
                     {"convergence_starts", opt.convergence_starts},
                     {"convergence_t", opt.convergence_t},
                     {"convergence_dt", opt.convergence_dt},
                     {"assume_persistent", opt.assume_persistent}};
  if (!rep.factorizable) {
    j["verdict"] = "not applicable";
    return out;
  }
  ConeConstruction cc = construct_cone(net, rep, opt.family, true);
  j["cone"] = {{"family", to_string(cc.set.family)},
               {"generators", cc.cone.generators.size()},
               {"dual_generators", cc.duals.generators.size()},
               {"symmetrized", cc.symmetrized},
               {"norm_ball_vertices", cc.ball->vertices.size()}};

  bool ok = true;
  double min_pairing = 0.0;
  ordered_json mono = ordered_json::array();
  for (std::size_t k = 0; k < nk; ++k) {
    auto kin = mass_action(net, kinetics_for(net, opt, k));
    auto m = monotonicity_oracle(net, kin, cc.cone, cc.duals, opt.states, opt.seed + 1000 * (k + 1));
    min_pairing = k == 0 ? m.min_pairing : std::min(min_pairing, m.min_pairing);
    ok = ok && m.passed();
    mono.push_back(monotonicity_json(m));
  }
  j["monotonicity"] = {{"min_pairing", min_pairing}, {"per_kinetic_seed", std::move(mono)}};

  if (opt.witnesses) {
    auto w = strong_witnesses(net, cc.cone, cc.duals);
    ok = ok && std::holds_alternative<WitnessTable>(w);
    j["strong_witnesses"] = witnesses_json(w);
  }

  auto kin0 = mass_action(net, kinetics_for(net, opt, 0));
  auto contr = contractivity_check(net, kin0, *cc.ball, opt.pairs, opt.t_final, opt.dt, opt.seed);
  ok = ok && contr.passed() && contr.pairs.size() == opt.pairs;
  j["contractivity"] = contractivity_json(contr);
  double drift = contr.max_conservation_drift;

  if (net.all_reversible() || opt.assume_persistent) {
    auto conv = convergence_check(net, kin0, opt.convergence_starts, opt.convergence_t, opt.convergence_dt, opt.seed);
    if (conv.compact) ok = ok && conv.passed();
    drift = std::max(drift, conv.max_conservation_drift);
    j["convergence"] = convergence_json(conv);
  } else {
    j["convergence"] = {{"skipped_reason", "network has irreversible reactions and persistence was not asserted"}};
  }
  j["integrator"] = {{"max_conservation_drift", drift}, {"passed", drift <= kDriftTol}};
  ok = ok && drift <= kDriftTol;
  out.verified = ok;
  j["verdict"] = ok ? "verified" : "failed";
  return out;
}

}  // namespace crn::cli
