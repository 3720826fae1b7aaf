#include "crn/kinetics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace crn {

KineticsSpec KineticsSpec::random(const ReactionNetwork& net, std::uint64_t seed) {
  KineticsSpec spec;
  spec.seed = seed;
  std::mt19937_64 rng = derive_rng(seed, 0x6b696e);
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  for (std::size_t j = 0; j < net.m(); ++j) {
    spec.kf.push_back(std::exp(u(rng)));
    double back = std::exp(u(rng));
    spec.kr.push_back(net.reversible[j] ? std::optional<double>(back) : std::nullopt);
  }
  return spec;
}

KineticsSpec KineticsSpec::constant(const ReactionNetwork& net, double kf, double kr) {
  KineticsSpec spec;
  for (std::size_t j = 0; j < net.m(); ++j) {
    spec.kf.push_back(kf);
    spec.kr.push_back(net.reversible[j] ? std::optional<double>(kr) : std::nullopt);
  }
  return spec;
}

KineticsSpec KineticsSpec::from_network(const ReactionNetwork& net) {
  KineticsSpec spec;
  for (std::size_t j = 0; j < net.m(); ++j) {
    if (!net.kf[j] || (net.reversible[j] && !net.kr[j]))
      throw std::invalid_argument("reaction '" + net.reaction_names[j] + "' lacks a stated rate constant");
    spec.kf.push_back(*net.kf[j]);
    spec.kr.push_back(net.reversible[j] ? net.kr[j] : std::nullopt);
  }
  return spec;
}

std::vector<double> RateEvaluator::rates(const std::vector<double>& x) const {
  if (x.size() != species_count()) throw std::invalid_argument("rates: dimension mismatch");
  std::vector<double> r(reaction_count());
  rates(x.data(), r.data());
  return r;
}

std::vector<double> RateEvaluator::rate_jacobian(const std::vector<double>& x) const {
  if (x.size() != species_count()) throw std::invalid_argument("rate_jacobian: dimension mismatch");
  std::vector<double> j(reaction_count() * species_count());
  rate_jacobian(x.data(), j.data());
  return j;
}

namespace {

struct Factor {
  std::size_t species;
  double order;
  int int_order;  // ≥ 1 when order is a small integer, else 0
};

double power(double x, const Factor& f) {
  if (f.int_order > 0) {
    double p = x;
    for (int k = 1; k < f.int_order; ++k) p *= x;
    return p;
  }
  return std::pow(x, f.order);
}

// d/dx x^order
double power_derivative(double x, const Factor& f) {
  if (f.int_order == 1) return 1.0;
  if (f.int_order > 1) {
    double p = 1.0;
    for (int k = 1; k < f.int_order; ++k) p *= x;
    return f.int_order * p;
  }
  return f.order * std::pow(x, f.order - 1.0);
}

std::vector<Factor> factors(const QMatrix& side, std::size_t j) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < side.rows(); ++i) {
    if (sgn(side(i, j)) == 0) continue;
    const Rational& q = side(i, j);
    int io = (q.get_den() == 1 && q <= 16) ? static_cast<int>(q.get_num().get_si()) : 0;
    out.push_back({i, q.get_d(), io});
  }
  return out;
}

class MassAction final : public RateEvaluator {
 public:
  MassAction(const ReactionNetwork& net, const KineticsSpec& spec) : n_(net.n()), m_(net.m()) {
    if (spec.kf.size() != m_ || spec.kr.size() != m_) throw std::invalid_argument("kinetics: constant count mismatch");
    for (std::size_t j = 0; j < m_; ++j) {
      if (!(spec.kf[j] > 0)) throw std::invalid_argument("kinetics: forward constants must be positive");
      if (net.reversible[j] && !(spec.kr[j] && *spec.kr[j] > 0))
        throw std::invalid_argument("kinetics: reversible reaction needs a positive backward constant");
      if (!net.reversible[j] && spec.kr[j]) throw std::invalid_argument("kinetics: irreversible reaction has kr");
      kf_.push_back(spec.kf[j]);
      kr_.push_back(net.reversible[j] ? *spec.kr[j] : 0.0);
      forward_.push_back(factors(net.reactants, j));
      backward_.push_back(net.reversible[j] ? factors(net.products, j) : std::vector<Factor>{});
    }
  }

  std::size_t species_count() const override { return n_; }
  std::size_t reaction_count() const override { return m_; }

  void rates(const double* x, double* r) const override {
    check(x);
    for (std::size_t j = 0; j < m_; ++j) r[j] = kf_[j] * monomial(forward_[j], x) - kr_[j] * monomial(backward_[j], x);
  }

  void rate_jacobian(const double* x, double* jac) const override {
    check(x);
    std::fill(jac, jac + m_ * n_, 0.0);
    for (std::size_t j = 0; j < m_; ++j) {
      accumulate(forward_[j], x, kf_[j], jac + j * n_);
      if (kr_[j] != 0.0) accumulate(backward_[j], x, -kr_[j], jac + j * n_);
    }
  }

 private:
  void check(const double* x) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!(x[i] >= 0.0)) throw std::domain_error("mass action: negative or NaN concentration");
  }

  static double monomial(const std::vector<Factor>& fs, const double* x) {
    double p = 1.0;
    for (const auto& f : fs) p *= power(x[f.species], f);
    return p;
  }

  // row += k ∂/∂x (∏ x^order)
  static void accumulate(const std::vector<Factor>& fs, const double* x, double k, double* row) {
    for (std::size_t a = 0; a < fs.size(); ++a) {
      double d = k * power_derivative(x[fs[a].species], fs[a]);
      for (std::size_t b = 0; b < fs.size(); ++b)
        if (b != a) d *= power(x[fs[b].species], fs[b]);
      row[fs[a].species] += d;
    }
  }

  std::size_t n_, m_;
  std::vector<double> kf_, kr_;
  std::vector<std::vector<Factor>> forward_, backward_;
};

}  // namespace

std::shared_ptr<const RateEvaluator> mass_action(const ReactionNetwork& net, const KineticsSpec& spec) {
  return std::make_shared<MassAction>(net, spec);
}

VectorField::VectorField(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> rates)
    : n_(net.n()), m_(net.m()), gamma_(net.gamma.to_double_row_major()), rates_(std::move(rates)), scratch_(m_) {
  if (rates_->species_count() != n_ || rates_->reaction_count() != m_)
    throw std::invalid_argument("vector field: rate evaluator shape mismatch");
}

void VectorField::eval(const double* x, double* dx) const {
  rates_->rates(x, scratch_.data());
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    const double* g = gamma_.data() + i * m_;
    for (std::size_t j = 0; j < m_; ++j) s += g[j] * scratch_[j];
    dx[i] = s;
  }
}

std::vector<double> VectorField::eval(const std::vector<double>& x) const {
  std::vector<double> dx(n_);
  eval(x.data(), dx.data());
  return dx;
}

std::vector<double> VectorField::jacobian(const std::vector<double>& x) const {
  std::vector<double> dr = rates_->rate_jacobian(x);
  std::vector<double> j(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t r = 0; r < m_; ++r) {
      double g = gamma_[i * m_ + r];
      if (g == 0.0) continue;
      for (std::size_t k = 0; k < n_; ++k) j[i * n_ + k] += g * dr[r * n_ + k];
    }
  return j;
}

}  // namespace crn
