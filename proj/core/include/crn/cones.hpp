#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crn/factorize.hpp"
#include "crn/network.hpp"
#include "crn/polyhedra.hpp"

namespace crn {

struct ClosureStep {
  QVector source;
  std::size_t reaction;
  int sign;  // result = source + sign·Γ
  QVector result;
};

// ⟨a, x⟩ ≤ beta
struct AffineFacet {
  QVector a;
  Rational beta;
};

struct ViableSet {
  std::vector<QVector> vectors;  // sorted, distinct
  std::vector<ClosureStep> closure_log;
  ConeFamily family = ConeFamily::custom;
  // Facets of conv(vectors) known from the construction; empty when unknown.
  std::vector<AffineFacet> hull_facets;
};

struct ClosureFailure {
  std::string kind;  // "cap exceeded" or "dead end"
  std::string detail;
};

inline constexpr std::size_t kDefaultClosureCap = std::size_t(1) << 16;

std::variant<ViableSet, ClosureFailure> viable_closure(const std::vector<QVector>& seeds, const ReactionNetwork& net,
                                                       std::size_t cap = kDefaultClosureCap);

// Every violation of permissibility or closedness, as readable strings; empty when the set is viable.
std::vector<std::string> audit_closure(const std::vector<QVector>& set, const ReactionNetwork& net);

// Network on the rows of N (columns of N, or of N·D_c when `type_c_scaling`), one species per
// row block. An irreversible column constrains a block when any member is a reactant.
ReactionNetwork reduced_network(const ReactionNetwork& net, const PNDFactorization& f, bool type_c_scaling);

// Preconditions are checked on the network's own matrix; throws std::invalid_argument.
ViableSet type_c_viable_set(const ReactionNetwork& net, std::size_t cap = kDefaultClosureCap);
ViableSet cubical_viable_set(const ReactionNetwork& net);
ViableSet subset_sum_viable_set(const ReactionNetwork& net);

struct ConeRepr {
  std::vector<QVector> generators;
  bool pointed = true;
  ConeFamily family = ConeFamily::custom;
  // Facet normals known from the family structure; validated before use.
  std::vector<QVector> facet_hint;
};

// Generators (p, 1); with `symmetrize`, the lift of points ∪ −points.
ConeRepr lift(const std::vector<QVector>& points, bool symmetrize);
// Lift of the extreme points of the set (of M′ ∪ −M′ when 0 is a vertex), carrying facet hints.
ConeRepr lift_viable_set(const ViableSet& set, bool* symmetrized = nullptr);
// Block-diagonal extension of P acting on every generator and hint normal.
ConeRepr apply_P(const ConeRepr& cone, const QMatrix& P);

struct DualGenerators {
  std::vector<QVector> generators;                // facet normals in span(K)
  std::vector<std::size_t> extreme_rays;          // indices into cone.generators
  std::vector<std::vector<std::size_t>> incidence;  // per extreme ray: orthogonal dual generators
  bool from_family_structure = false;
};

DualGenerators dual_generators(const ConeRepr& cone, const FacetOptions& opts = {});
// Ignores any hint and runs double description.
DualGenerators dual_generators_dd(const ConeRepr& cone, const FacetOptions& opts = {});
// Duals of apply_P(cone, P) from the duals of cone.
DualGenerators apply_P(const DualGenerators& duals, const QMatrix& P);

struct NormBall {
  std::vector<QVector> vertices;        // of H = P − P, in the un-lifted space
  std::vector<QVector> subspace_basis;  // basis of S
  QVector anchor;                       // b, lifted
  std::vector<QVector> slice_vertices;  // vertices of P = (b + S) ∩ K, lifted
  bool slice_centrally_symmetric = false;

  // numeric cache for gauge evaluation
  std::size_t dim = 0;                          // dim S
  std::vector<std::vector<double>> coord_map;   // dim × n: x ↦ coordinates in subspace_basis
  std::vector<std::vector<double>> basis_d;     // dim vectors of length n
  std::vector<std::vector<double>> vertex_coords;  // dim rows × |vertices|
};

// Throws GeometryError when a hypothesis fails (K ∩ S ≠ {0}, S ⊄ span K, empty or unbounded slice).
NormBall norm_ball(const ConeRepr& cone, const std::vector<QVector>& S, std::size_t difference_cap = 20000);

// Minkowski gauge of H by LP over its vertices. Throws std::domain_error when x ∉ span S.
double gauge(const NormBall& ball, const std::vector<double>& x);

// Facet functionals φ of H in subspace coordinates: H = {y : ⟨φ, y⟩ ≤ 1}.
std::vector<QVector> norm_ball_facets(const NormBall& ball, const FacetOptions& opts = {});
// Exact gauge from facet functionals; x must lie in span S.
Rational gauge_exact(const NormBall& ball, const std::vector<QVector>& facets, const QVector& x);

}  // namespace crn
