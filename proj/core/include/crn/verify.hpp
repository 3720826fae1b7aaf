#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "crn/cones.hpp"
#include "crn/kinetics.hpp"

namespace crn {

struct MonotonicityReport {
  std::size_t samples = 0;
  std::size_t pairs = 0;                 // incidence pairs checked per state
  double min_pairing = 0.0;              // over unit-normalized (ray, dual) pairs
  std::vector<double> per_pair_min;      // aligned with pair_index
  std::vector<std::pair<std::size_t, std::size_t>> pair_index;  // (generator, dual generator)
  std::uint64_t seed = 0;
  double tolerance = 1e-9;

  bool passed() const { return min_pairing >= -tolerance; }
};

// ⟨J k, a⟩ for the lifted Jacobian, over every (extreme ray k, orthogonal dual a) pair.
MonotonicityReport monotonicity_oracle(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                       const ConeRepr& cone, const DualGenerators& duals, std::size_t n_states,
                                       std::uint64_t seed);

struct FaceWitness {
  std::vector<std::size_t> face;  // generator indices of the extreme rays in the face
  std::size_t ray = 0;            // generator index of k
  std::size_t reaction = 0;
  int sign = 0;                   // kᵢ = k + sign·(Γᵢ, 0)
  QVector k_i;
};

struct WitnessTable {
  std::vector<FaceWitness> witnesses;
  std::size_t face_count = 0;
};

struct WitnessFailure {
  std::vector<std::vector<std::size_t>> uncovered;
  WitnessTable partial;
};

inline constexpr std::size_t kDefaultFaceCap = 200000;

// Proper nonzero faces come from intersections of facet ray sets.
std::variant<WitnessTable, WitnessFailure> strong_witnesses(const ReactionNetwork& net, const ConeRepr& cone,
                                                            const DualGenerators& duals,
                                                            std::size_t face_cap = kDefaultFaceCap);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double dt = 0.0;
  double min_step = 0.0;
  std::size_t steps = 0;
  std::size_t halvings = 0;
  double max_conservation_drift = 0.0;
};

class StepUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kCheckpoints = 50;

// Classic RK4 sampled at checkpoints + 1 equally spaced times on [0, T].
Trajectory integrate(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                     const std::vector<double>& x0, double T, double dt, std::size_t checkpoints = kCheckpoints);

struct PairSeries {
  std::vector<double> x0, y0;
  std::vector<double> gauge_distance;
  std::vector<double> euclidean_distance;
  bool nonexpansive = false;
  bool strictly_decreasing_overall = false;
  double max_increase = 0.0;
};

struct ContractivityReport {
  std::vector<PairSeries> pairs;
  std::size_t discarded = 0;  // pairs whose trajectories reached the boundary
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double margin_factor = 1e-6;
  double max_conservation_drift = 0.0;

  bool passed() const;
};

ContractivityReport contractivity_check(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                        const NormBall& ball, std::size_t n_pairs, double T, double dt,
                                        std::uint64_t seed);

struct ConvergenceReport {
  bool compact = false;
  std::string skipped_reason;
  QVector conserved_totals;
  std::vector<std::vector<double>> terminal_states;
  double diameter = 0.0;
  double residual = 0.0;
  double T = 0.0, dt = 0.0;
  std::uint64_t seed = 0;
  double diameter_tol = 1e-5, residual_tol = 1e-8;
  double max_conservation_drift = 0.0;

  bool passed() const { return compact && diameter <= diameter_tol && residual <= residual_tol; }
};

ConvergenceReport convergence_check(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                    std::size_t n_starts, double T, double dt, std::uint64_t seed);

}  // namespace crn
