#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "crn/network.hpp"

namespace crn {

struct KineticsSpec {
  std::vector<double> kf;
  std::vector<std::optional<double>> kr;  // empty for irreversible reactions
  std::uint64_t seed = 0;

  // Constants log-uniform on [0.1, 10].
  static KineticsSpec random(const ReactionNetwork& net, std::uint64_t seed);
  static KineticsSpec constant(const ReactionNetwork& net, double kf, double kr);
  // Constants stated in the network source; throws when any is missing.
  static KineticsSpec from_network(const ReactionNetwork& net);
};

// Reaction rates R(x) and their partial derivatives ∂Rⱼ/∂xᵢ. Implementations are pure.
class RateEvaluator {
 public:
  virtual ~RateEvaluator() = default;
  virtual std::size_t species_count() const = 0;
  virtual std::size_t reaction_count() const = 0;
  // r has m entries.
  virtual void rates(const double* x, double* r) const = 0;
  // jac is m×n row-major.
  virtual void rate_jacobian(const double* x, double* jac) const = 0;

  std::vector<double> rates(const std::vector<double>& x) const;
  std::vector<double> rate_jacobian(const std::vector<double>& x) const;
};

// Throws std::domain_error on negative concentrations.
std::shared_ptr<const RateEvaluator> mass_action(const ReactionNetwork& net, const KineticsSpec& spec);

// ẋ = Γ R(x).
class VectorField {
 public:
  VectorField(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> rates);

  std::size_t dimension() const { return n_; }
  void eval(const double* x, double* dx) const;
  std::vector<double> eval(const std::vector<double>& x) const;
  // n×n row-major Γ ∂R(x).
  std::vector<double> jacobian(const std::vector<double>& x) const;
  const RateEvaluator& rates() const { return *rates_; }

 private:
  std::size_t n_, m_;
  std::vector<double> gamma_;  // n×m row-major
  std::shared_ptr<const RateEvaluator> rates_;
  mutable std::vector<double> scratch_;  // rate buffer; one VectorField per thread
};

}  // namespace crn
