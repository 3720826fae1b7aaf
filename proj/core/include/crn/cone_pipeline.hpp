#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/cones.hpp"

namespace crn {

enum class FamilyRequest { automatic, type_c, cube, subset_sum };

// Every stage of the cone construction for one network. The reduced objects live on the
// rows of N; `cone`, `duals` and `ball` live in species space (first n coordinates, then the lift).
struct ConeConstruction {
  QMatrix P;
  ReactionNetwork reduced;
  ViableSet set;
  bool symmetrized = false;
  ConeRepr reduced_cone;
  DualGenerators reduced_duals;
  ConeRepr cone;
  DualGenerators duals;
  std::optional<NormBall> ball;
  std::vector<std::string> notes;
};

// Throws std::invalid_argument when the network has no factorization or the requested family
// does not fit; geometry and cap errors propagate.
ConeConstruction construct_cone(const ReactionNetwork& net, const ClassificationReport& report,
                                FamilyRequest family = FamilyRequest::automatic, bool build_ball = true,
                                const FacetOptions& opts = {});

// Basis of the stoichiometric subspace, as species-space vectors.
std::vector<QVector> stoichiometric_basis(const ReactionNetwork& net);

}  // namespace crn
