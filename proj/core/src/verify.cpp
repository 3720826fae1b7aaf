#include "crn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "crn/graphs.hpp"
#include "crn/linalg.hpp"

namespace crn {

namespace {

std::vector<double> unit_double(const QVector& v) {
  std::vector<double> d = to_double(v);
  double s = 0.0;
  for (double x : d) s += x * x;
  s = std::sqrt(s);
  if (s > 0)
    for (double& x : d) x /= s;
  return d;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

std::vector<std::vector<double>> conservation_rows(const ReactionNetwork& net) {
  std::vector<std::vector<double>> rows;
  for (const auto& c : left_kernel(net.gamma)) {
    auto d = to_double(c);
    double s = inf_norm(d);
    for (double& x : d) x /= s;
    rows.push_back(std::move(d));
  }
  return rows;
}

}  // namespace

MonotonicityReport monotonicity_oracle(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                       const ConeRepr& cone, const DualGenerators& duals, std::size_t n_states,
                                       std::uint64_t seed) {
  const std::size_t n = net.n();
  MonotonicityReport rep;
  rep.seed = seed;
  std::vector<std::vector<double>> ks, as;
  for (std::size_t t = 0; t < duals.extreme_rays.size(); ++t)
    for (auto f : duals.incidence[t]) {
      rep.pair_index.emplace_back(duals.extreme_rays[t], f);
      ks.push_back(unit_double(cone.generators[duals.extreme_rays[t]]));
      as.push_back(unit_double(duals.generators[f]));
    }
  rep.pairs = rep.pair_index.size();
  rep.per_pair_min.assign(rep.pairs, std::numeric_limits<double>::infinity());
  rep.min_pairing = std::numeric_limits<double>::infinity();
  VectorField field(net, std::move(kinetics));
  for (std::size_t s = 0; s < n_states; ++s) {
    auto rng = derive_rng(seed, s);
    auto x = random_state(n, rng);
    auto J = field.jacobian(x);
    for (std::size_t p = 0; p < rep.pairs; ++p) {
      // the lift borders J with a zero row and column, so only the first n coordinates pair
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t c = 0; c < n; ++c) row += J[i * n + c] * ks[p][c];
        v += as[p][i] * row;
      }
      rep.per_pair_min[p] = std::min(rep.per_pair_min[p], v);
      rep.min_pairing = std::min(rep.min_pairing, v);
    }
    ++rep.samples;
  }
  if (rep.pairs == 0) rep.min_pairing = 0.0;
  return rep;
}

namespace {

using Bits = std::vector<bool>;

}  // namespace

std::variant<WitnessTable, WitnessFailure> strong_witnesses(const ReactionNetwork& net, const ConeRepr& cone,
                                                            const DualGenerators& duals, std::size_t face_cap) {
  const std::size_t R = duals.extreme_rays.size(), F = duals.generators.size(), n = net.n();
  std::vector<Bits> facet_rays(F, Bits(R, false));
  for (std::size_t t = 0; t < R; ++t)
    for (auto f : duals.incidence[t]) facet_rays[f][t] = true;

  std::set<Bits> faces;
  std::deque<Bits> queue;
  auto add = [&](Bits b) {
    if (std::none_of(b.begin(), b.end(), [](bool x) { return x; })) return;
    if (faces.insert(b).second) {
      if (faces.size() > face_cap) throw ResourceCapError("strong_witnesses: more than " + std::to_string(face_cap) + " faces");
      queue.push_back(std::move(b));
    }
  };
  for (const auto& b : facet_rays) add(b);
  while (!queue.empty()) {
    Bits b = std::move(queue.front());
    queue.pop_front();
    for (const auto& fr : facet_rays) {
      Bits c(R);
      for (std::size_t t = 0; t < R; ++t) c[t] = b[t] && fr[t];
      add(std::move(c));
    }
  }

  std::vector<QVector> lifted_gamma;
  for (std::size_t j = 0; j < net.m(); ++j) {
    QVector g = net.gamma.column(j);
    g.push_back(0);
    lifted_gamma.push_back(std::move(g));
  }

  WitnessFailure fail;
  fail.partial.face_count = faces.size();
  for (const auto& face : faces) {
    std::vector<std::size_t> members, defining;
    for (std::size_t t = 0; t < R; ++t)
      if (face[t]) members.push_back(duals.extreme_rays[t]);
    for (std::size_t f = 0; f < F; ++f) {
      bool all = true;
      for (std::size_t t = 0; t < R && all; ++t) all = !face[t] || facet_rays[f][t];
      if (all) defining.push_back(f);
    }
    std::optional<FaceWitness> found;
    for (std::size_t t = 0; t < R && !found; ++t) {
      if (!face[t]) continue;
      const QVector& k = cone.generators[duals.extreme_rays[t]];
      QVector head(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
      const bool permissible = is_permissible(head, net);
      std::vector<PermissibleOp> ops;
      if (permissible) ops = permissible_ops(head, net);
      for (std::size_t j = 0; j < net.m() && !found; ++j) {
        if (q_region_classify(head, j, net) == Region::Q2) continue;
        std::vector<int> signs;
        for (const auto& op : ops)
          if (op.reaction == j) signs.push_back(op.sign);
        signs.push_back(1);
        signs.push_back(-1);
        for (int s : signs) {
          QVector ki = k + Rational(s) * lifted_gamma[j];
          bool in_cone = true, leaves_face = false;
          for (std::size_t f = 0; f < F && in_cone; ++f) in_cone = sgn(dot(duals.generators[f], ki)) >= 0;
          for (auto f : defining) leaves_face = leaves_face || sgn(dot(duals.generators[f], ki)) > 0;
          if (in_cone && leaves_face) {
            found = FaceWitness{members, duals.extreme_rays[t], j, s, std::move(ki)};
            break;
          }
        }
      }
    }
    if (found)
      fail.partial.witnesses.push_back(std::move(*found));
    else
      fail.uncovered.push_back(members);
  }
  if (fail.uncovered.empty()) return std::move(fail.partial);
  return fail;
}

namespace {

constexpr double kNegativeSlack = 1e-12;
constexpr double kMinStep = 1e-12;

class Rk4 {
 public:
  Rk4(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> rates)
      : field_(net, std::move(rates)), n_(net.n()), k1_(n_), k2_(n_), k3_(n_), k4_(n_), tmp_(n_), out_(n_) {}

  // Advances x by h, halving on any excursion below −kNegativeSlack.
  void advance(std::vector<double>& x, double h, Trajectory& tr) {
    if (step(x, h)) {
      x.swap(out_);
      ++tr.steps;
      tr.min_step = std::min(tr.min_step, h);
      return;
    }
    if (h / 2 < kMinStep) throw StepUnderflow("integrate: step size fell below 1e-12");
    ++tr.halvings;
    advance(x, h / 2, tr);
    advance(x, h / 2, tr);
  }

 private:
  // false when a stage or the result leaves the nonnegative orthant beyond the slack
  bool stage(const std::vector<double>& x, const std::vector<double>& k, double c) {
    for (std::size_t i = 0; i < n_; ++i) {
      double v = x[i] + c * k[i];
      if (v < -kNegativeSlack) return false;
      tmp_[i] = v < 0 ? 0.0 : v;
    }
    return true;
  }

  bool step(const std::vector<double>& x, double h) {
    field_.eval(x.data(), k1_.data());
    if (!stage(x, k1_, h / 2)) return false;
    field_.eval(tmp_.data(), k2_.data());
    if (!stage(x, k2_, h / 2)) return false;
    field_.eval(tmp_.data(), k3_.data());
    if (!stage(x, k3_, h)) return false;
    field_.eval(tmp_.data(), k4_.data());
    for (std::size_t i = 0; i < n_; ++i) {
      double v = x[i] + h / 6 * (k1_[i] + 2 * k2_[i] + 2 * k3_[i] + k4_[i]);
      if (v < -kNegativeSlack) return false;
      out_[i] = v < 0 ? 0.0 : v;
    }
    return true;
  }

  VectorField field_;
  std::size_t n_;
  std::vector<double> k1_, k2_, k3_, k4_, tmp_, out_;
};

}  // namespace

Trajectory integrate(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                     const std::vector<double>& x0, double T, double dt, std::size_t checkpoints) {
  if (x0.size() != net.n()) throw std::invalid_argument("integrate: state dimension mismatch");
  if (!(T > 0) || !(dt > 0) || checkpoints == 0) throw std::invalid_argument("integrate: T, dt and checkpoints must be positive");
  for (double v : x0)
    if (!(v >= 0)) throw std::invalid_argument("integrate: initial state must be nonnegative");
  if (dt < kMinStep) throw StepUnderflow("integrate: dt below 1e-12");
  Rk4 rk(net, std::move(kinetics));
  auto cons = conservation_rows(net);
  Trajectory tr;
  tr.dt = dt;
  tr.min_step = dt;
  std::vector<double> x = x0;
  tr.times.push_back(0.0);
  tr.states.push_back(x);
  const double interval = T / static_cast<double>(checkpoints);
  const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(interval / dt - 1e-9)));
  const double h = interval / static_cast<double>(sub);
  for (std::size_t c = 1; c <= checkpoints; ++c) {
    for (std::size_t s = 0; s < sub; ++s) rk.advance(x, h, tr);
    tr.times.push_back(T * static_cast<double>(c) / static_cast<double>(checkpoints));
    tr.states.push_back(x);
    for (const auto& row : cons) {
      double d = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) d += row[i] * (x[i] - x0[i]);
      tr.max_conservation_drift = std::max(tr.max_conservation_drift, std::fabs(d));
    }
  }
  return tr;
}

bool ContractivityReport::passed() const {
  if (pairs.empty()) return false;
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairSeries& p) { return p.nonexpansive && p.strictly_decreasing_overall; });
}

ContractivityReport contractivity_check(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                        const NormBall& ball, std::size_t n_pairs, double T, double dt,
                                        std::uint64_t seed) {
  ContractivityReport rep;
  rep.seed = seed;
  const std::size_t max_attempts = 5 * n_pairs + 10;
  for (std::size_t attempt = 0; rep.pairs.size() < n_pairs && attempt < max_attempts; ++attempt) {
    auto rng = derive_rng(seed, attempt);
    CompatiblePair pair;
    try {
      auto cls = compat_class(net, random_rational_state(net.n(), rng));
      pair = sample_compatible_pair(cls, net, rng);
    } catch (const SamplingError&) {
      ++rep.discarded;
      continue;
    }
    PairSeries ps;
    ps.x0 = to_double(pair.x0);
    ps.y0 = to_double(pair.y0);
    auto tx = integrate(net, kinetics, ps.x0, T, dt);
    auto ty = integrate(net, kinetics, ps.y0, T, dt);
    rep.max_conservation_drift =
        std::max({rep.max_conservation_drift, tx.max_conservation_drift, ty.max_conservation_drift});
    bool interior = true;
    for (std::size_t c = 0; c < tx.states.size() && interior; ++c)
      for (std::size_t i = 0; i < net.n(); ++i)
        if (tx.states[c][i] <= kNegativeSlack || ty.states[c][i] <= kNegativeSlack) interior = false;
    if (!interior) {
      ++rep.discarded;
      continue;
    }
    std::vector<double> diff(net.n());
    for (std::size_t c = 0; c < tx.states.size(); ++c) {
      double e = 0.0;
      for (std::size_t i = 0; i < net.n(); ++i) {
        diff[i] = tx.states[c][i] - ty.states[c][i];
        e += diff[i] * diff[i];
      }
      ps.gauge_distance.push_back(gauge(ball, diff));
      ps.euclidean_distance.push_back(std::sqrt(e));
    }
    ps.nonexpansive = true;
    for (std::size_t c = 1; c < ps.gauge_distance.size(); ++c) {
      double inc = ps.gauge_distance[c] - ps.gauge_distance[c - 1];
      ps.max_increase = std::max(ps.max_increase, inc);
      if (inc > rep.tol) ps.nonexpansive = false;
    }
    const double d0 = ps.gauge_distance.front();
    ps.strictly_decreasing_overall = d0 > 0 && ps.gauge_distance.back() <= d0 - rep.margin_factor * d0;
    rep.pairs.push_back(std::move(ps));
  }
  return rep;
}

ConvergenceReport convergence_check(const ReactionNetwork& net, std::shared_ptr<const RateEvaluator> kinetics,
                                    std::size_t n_starts, double T, double dt, std::uint64_t seed) {
  ConvergenceReport rep;
  rep.T = T;
  rep.dt = dt;
  rep.seed = seed;
  if (!positive_flux_vector(net.gamma.transpose())) {
    rep.skipped_reason = "no positive conservation law; the compatibility class is not compact";
    return rep;
  }
  rep.compact = true;
  auto rng = derive_rng(seed, 0);
  QVector anchor = random_rational_state(net.n(), rng);
  auto cls = compat_class(net, anchor);
  for (const auto& c : cls.conservation_basis) rep.conserved_totals.push_back(dot(c, anchor));
  std::vector<std::vector<double>> starts{to_double(anchor)};
  for (std::size_t s = 1; s < n_starts; ++s) {
    auto r = derive_rng(seed, s);
    starts.push_back(to_double(sample_compatible_pair(cls, net, r).y0));
  }
  VectorField field(net, kinetics);
  for (const auto& x0 : starts) {
    auto tr = integrate(net, kinetics, x0, T, dt, 10);
    rep.max_conservation_drift = std::max(rep.max_conservation_drift, tr.max_conservation_drift);
    rep.terminal_states.push_back(tr.states.back());
    rep.residual = std::max(rep.residual, inf_norm(field.eval(tr.states.back())));
  }
  for (std::size_t a = 0; a < rep.terminal_states.size(); ++a)
    for (std::size_t b = a + 1; b < rep.terminal_states.size(); ++b) {
      double d = 0.0;
      for (std::size_t i = 0; i < net.n(); ++i)
        d = std::max(d, std::fabs(rep.terminal_states[a][i] - rep.terminal_states[b][i]));
      rep.diameter = std::max(rep.diameter, d);
    }
  return rep;
}

}  // namespace crn
