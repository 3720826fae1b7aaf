#include <gtest/gtest.h>

#include <cmath>

#include "printers.hpp"
#include "crn/cone_pipeline.hpp"
#include "crn/corpus.hpp"
#include "crn/verify.hpp"

using namespace crn;

namespace {

ReactionNetwork reversible_from(const QMatrix& g) {
  return network_from_gamma(g, std::vector<bool>(g.cols(), true));
}

std::shared_ptr<const RateEvaluator> unit_rates(const ReactionNetwork& net) {
  return mass_action(net, KineticsSpec::constant(net, 1.0, 1.0));
}

double closed_form_error(double T, double dt) {
  auto net = parse_network("A <-> B");
  auto tr = integrate(net, unit_rates(net), {2.0, 0.0}, T, dt, 1);
  return std::abs(tr.states.back()[0] - (1.0 + std::exp(-2.0 * T)));
}

}  // namespace

TEST(Monotonicity, CompetitiveBindingCone) {
  auto net = corpus_network("competitive_binding");
  auto cc = construct_cone(net, classify(net), FamilyRequest::automatic, false);
  auto rep = monotonicity_oracle(net, mass_action(net, KineticsSpec::random(net, 7)), cc.cone, cc.duals, 100, 7);
  EXPECT_EQ(rep.samples, 100u);
  EXPECT_GT(rep.pairs, 0u);
  EXPECT_GE(rep.min_pairing, -1e-9);
  EXPECT_TRUE(rep.passed());
}

TEST(Monotonicity, OrthantIsTheWrongConeForCompetitiveBinding) {
  auto net = corpus_network("competitive_binding");
  ConeRepr orthant;
  for (std::size_t i = 0; i <= net.n(); ++i) {
    QVector e(net.n() + 1);
    e[i] = 1;
    orthant.generators.push_back(e);
  }
  auto duals = dual_generators_dd(orthant);
  auto rep = monotonicity_oracle(net, mass_action(net, KineticsSpec::random(net, 7)), orthant, duals, 100, 7);
  EXPECT_LT(rep.min_pairing, 0.0);
  EXPECT_FALSE(rep.passed());
}

TEST(Monotonicity, SingleConversion) {
  auto net = parse_network("A <-> B");
  auto cc = construct_cone(net, classify(net), FamilyRequest::automatic, false);
  auto rep = monotonicity_oracle(net, unit_rates(net), cc.cone, cc.duals, 50, 1);
  EXPECT_GE(rep.min_pairing, -1e-12);
}

TEST(Monotonicity, DeterministicGivenSeed) {
  auto net = corpus_network("three_body");
  auto cc = construct_cone(net, classify(net), FamilyRequest::automatic, false);
  auto k = mass_action(net, KineticsSpec::random(net, 2));
  auto a = monotonicity_oracle(net, k, cc.cone, cc.duals, 20, 99);
  auto b = monotonicity_oracle(net, k, cc.cone, cc.duals, 20, 99);
  EXPECT_EQ(a.per_pair_min, b.per_pair_min);
  EXPECT_EQ(a.min_pairing, b.min_pairing);
}

TEST(Witnesses, CrossPolytopeTypeC) {
  auto net = reversible_from(QMatrix::of({{-1, 2}, {1, 0}}));
  auto rep = classify(net);
  ASSERT_TRUE(rep.ri_strongly_connected);
  // this N is also cubical, so the automatic choice would be the cube
  auto cc = construct_cone(net, rep, FamilyRequest::type_c, false);
  EXPECT_EQ(cc.set.family, ConeFamily::cross_polytope);
  auto w = strong_witnesses(net, cc.cone, cc.duals);
  ASSERT_TRUE(std::holds_alternative<WitnessTable>(w));
  const auto& tab = std::get<WitnessTable>(w);
  EXPECT_EQ(tab.witnesses.size(), tab.face_count);
  for (const auto& fw : tab.witnesses) {
    QVector expect = cc.cone.generators[fw.ray];
    for (std::size_t i = 0; i < net.n(); ++i) expect[i] += fw.sign * net.gamma(i, fw.reaction);
    EXPECT_EQ(fw.k_i, expect);
  }
}

TEST(Witnesses, SimplexFromReversiblePair) {
  auto net = reversible_from(QMatrix::of({{-1, 1}, {1, -1}}));
  auto cone = lift_viable_set(type_c_viable_set(net));
  auto duals = dual_generators(cone);
  auto w = strong_witnesses(net, cone, duals);
  ASSERT_TRUE(std::holds_alternative<WitnessTable>(w));
  EXPECT_EQ(std::get<WitnessTable>(w).face_count, 2u);
}

TEST(Witnesses, DisconnectedNetworkLeavesAFaceUncovered) {
  // already reduced: two reactions on disjoint species, each a single merged row
  auto net = reversible_from(QMatrix::of({{-1, 0}, {0, -1}}));
  ASSERT_FALSE(classify(net).ri_strongly_connected);
  auto set = cubical_viable_set(net);
  auto cone = lift(set.vectors, false);
  auto duals = dual_generators_dd(cone);
  auto w = strong_witnesses(net, cone, duals);
  ASSERT_TRUE(std::holds_alternative<WitnessFailure>(w));
  EXPECT_FALSE(std::get<WitnessFailure>(w).uncovered.empty());
}

TEST(Integrate, ClosedFormAccuracy) {
  EXPECT_LT(closed_form_error(20.0, 1e-3), 1e-6);
  auto net = parse_network("A <-> B");
  auto tr = integrate(net, unit_rates(net), {2.0, 0.0}, 20.0, 1e-3);
  EXPECT_EQ(tr.states.size(), kCheckpoints + 1);
  EXPECT_DOUBLE_EQ(tr.times.back(), 20.0);
  EXPECT_LE(tr.max_conservation_drift, 1e-12);
}

TEST(Integrate, FourthOrder) {
  double coarse = closed_form_error(1.0, 0.1), fine = closed_form_error(1.0, 0.05);
  EXPECT_GT(coarse / fine, 14.0);
  EXPECT_LT(coarse / fine, 18.0);
}

TEST(Integrate, EquilibriumStaysPut) {
  auto net = parse_network("A <-> B");
  auto tr = integrate(net, unit_rates(net), {1.0, 1.0}, 5.0, 1e-2);
  for (const auto& x : tr.states) {
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 1.0);
  }
}

TEST(Integrate, RkipConservesTotals) {
  auto net = corpus_network("rkip");
  std::mt19937_64 rng(42);
  auto tr = integrate(net, mass_action(net, KineticsSpec::random(net, 42)), random_state(net.n(), rng), 50.0, 1e-3);
  EXPECT_LE(tr.max_conservation_drift, 1e-8);
}

TEST(Integrate, StaysNonnegativeUnderFastConsumption) {
  auto net = parse_network("A + B -> C");
  auto tr = integrate(net, mass_action(net, KineticsSpec::constant(net, 500.0, 0.0)), {1.0, 1.0, 0.0}, 1.0, 0.05, 20);
  for (const auto& x : tr.states)
    for (double v : x) EXPECT_GE(v, 0.0);
  EXPECT_LE(tr.max_conservation_drift, 1e-9);
}

TEST(Integrate, RejectsBadArguments) {
  auto net = parse_network("A <-> B");
  EXPECT_THROW(integrate(net, unit_rates(net), {-1.0, 1.0}, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(integrate(net, unit_rates(net), {1.0, 1.0}, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(integrate(net, unit_rates(net), {1.0, 1.0}, 1.0, 1e-13), StepUnderflow);
}

TEST(Contractivity, RkipPairs) {
  auto net = corpus_network("rkip");
  auto cc = construct_cone(net, classify(net));
  auto rep = contractivity_check(net, mass_action(net, KineticsSpec::random(net, 42)), *cc.ball, 20, 50.0, 1e-3, 42);
  ASSERT_EQ(rep.pairs.size(), 20u);
  for (const auto& p : rep.pairs) {
    EXPECT_TRUE(p.nonexpansive);
    EXPECT_TRUE(p.strictly_decreasing_overall);
    EXPECT_EQ(p.gauge_distance.size(), kCheckpoints + 1);
    EXPECT_EQ(p.euclidean_distance.size(), p.gauge_distance.size());
    EXPECT_NE(p.x0, p.y0);
  }
  EXPECT_TRUE(rep.passed());
  EXPECT_LE(rep.max_conservation_drift, 1e-8);
}

TEST(Contractivity, DeterministicGivenSeed) {
  auto net = corpus_network("competitive_binding");
  auto cc = construct_cone(net, classify(net));
  auto k = mass_action(net, KineticsSpec::random(net, 3));
  auto a = contractivity_check(net, k, *cc.ball, 3, 5.0, 1e-2, 11);
  auto b = contractivity_check(net, k, *cc.ball, 3, 5.0, 1e-2, 11);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) EXPECT_EQ(a.pairs[i].gauge_distance, b.pairs[i].gauge_distance);
}

TEST(Convergence, SingleConversion) {
  auto net = parse_network("A <-> B");
  auto rep = convergence_check(net, unit_rates(net), 10, 40.0, 1e-2, 5);
  ASSERT_TRUE(rep.compact);
  EXPECT_TRUE(rep.passed());
  for (const auto& x : rep.terminal_states) {
    double total = x[0] + x[1];
    EXPECT_NEAR(x[0], total / 2, 1e-8);
  }
}

TEST(Convergence, NonCompactClassIsSkipped) {
  auto net = parse_network("0 <-> A");
  auto rep = convergence_check(net, unit_rates(net), 3, 1.0, 1e-2, 5);
  EXPECT_FALSE(rep.compact);
  EXPECT_FALSE(rep.skipped_reason.empty());
  EXPECT_FALSE(rep.passed());
}
