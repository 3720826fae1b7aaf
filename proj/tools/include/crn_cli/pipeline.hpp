#pragma once

#include <cstdint>

#include "crn_cli/report.hpp"

namespace crn::cli {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t states = 100;
  std::size_t kinetic_seeds = 5;
  std::size_t pairs = 20;
  double t_final = 50.0;
  double dt = 1e-3;
  bool assume_persistent = false;
  bool stated_rates = false;  // use kf/kr from the file instead of seeded random constants
  std::size_t convergence_starts = 10;
  double convergence_t = 400.0;
  double convergence_dt = 1e-2;
  bool witnesses = true;
  FamilyRequest family = FamilyRequest::automatic;
};

struct VerifyOutcome {
  ordered_json report;
  bool verified = false;
};

// Kinetics for kinetic seed index k: seeded random constants unless stated rates are requested.
KineticsSpec kinetics_for(const ReactionNetwork& net, const VerifyOptions& opt, std::size_t k);

// classify → cone → monotonicity, witnesses, contractivity, convergence, integrator drift.
VerifyOutcome verify_network(const ReactionNetwork& net, const VerifyOptions& opt);

}  // namespace crn::cli
