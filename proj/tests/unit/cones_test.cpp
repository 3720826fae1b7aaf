#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "printers.hpp"
#include "crn/cone_pipeline.hpp"
#include "crn/corpus.hpp"
#include "crn/linalg.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace crn;

namespace {

ReactionNetwork reversible_from(const QMatrix& g) {
  return network_from_gamma(g, std::vector<bool>(g.cols(), true));
}

std::vector<QVector> sorted(std::vector<QVector> v) {
  std::sort(v.begin(), v.end(), QVectorLess{});
  return v;
}

QMatrix cubical_N() {
  return QMatrix::of({{-1, 0, 0, 1}, {1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, 1, 0}, {0, 0, 0, -1}});
}

std::vector<double> dbl(const QVector& v) { return to_double(v); }

// Corpus networks whose cones are small enough for repeated double description.
const std::vector<std::string> kSmallCorpus = {"competitive_binding", "three_body", "cubical_example", "pcr_annealing",
                                               "electron_transfer"};

}  // namespace

TEST(ViableClosure, ReversiblePair) {
  auto net = reversible_from(QMatrix::of({{-1, 1}, {1, -1}}));
  auto r = viable_closure({QVector{1, 0}}, net);
  ASSERT_TRUE(std::holds_alternative<ViableSet>(r));
  const auto& set = std::get<ViableSet>(r);
  EXPECT_EQ(set.vectors, (std::vector<QVector>{{0, 1}, {1, 0}}));
  EXPECT_EQ(set.vectors, sorted(oracle::closure({QVector{1, 0}}, net)));
}

TEST(ViableClosure, FixedPointHasEmptyLog) {
  auto net = reversible_from(QMatrix::of({{-1, 1}, {1, -1}}));
  auto r = viable_closure({QVector{1, 0}, QVector{0, 1}}, net);
  const auto& set = std::get<ViableSet>(r);
  EXPECT_EQ(set.vectors.size(), 2u);
  // every op from a closed seed set lands inside it, so nothing new is logged
  for (const auto& step : set.closure_log) EXPECT_NE(std::find(set.vectors.begin(), set.vectors.end(), step.result), set.vectors.end());
  auto again = viable_closure(set.vectors, net);
  EXPECT_EQ(std::get<ViableSet>(again).vectors, set.vectors);
}

TEST(ViableClosure, CapAndDeadEnd) {
  auto net = parse_network("A1 <-> A2 ; A2 <-> A3 ; A3 <-> A4");
  auto capped = viable_closure({QVector{1, 0, 0, 0}}, net, 2);
  ASSERT_TRUE(std::holds_alternative<ClosureFailure>(capped));
  EXPECT_EQ(std::get<ClosureFailure>(capped).kind, "cap exceeded");

  // e_A meets only the first reaction, and e_A + Γ₁ = e_B + e_C is mixed against the second
  auto dead = parse_network("A <-> B + C ; C <-> B");
  auto r = viable_closure({QVector{1, 0, 0}}, dead);
  ASSERT_TRUE(std::holds_alternative<ClosureFailure>(r));
  EXPECT_EQ(std::get<ClosureFailure>(r).kind, "dead end");
}

TEST(ViableClosure, MatchesOracleOnTypeC) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    auto net = reversible_from(gen::random_type_c(rng, 5));
    std::size_t first = 0;
    while (is_zero(net.gamma(first, 0))) ++first;
    QVector seed(net.n());
    seed[first] = 1;
    auto r = viable_closure({seed}, net);
    auto o = sorted(oracle::closure({seed}, net));
    if (std::holds_alternative<ViableSet>(r)) {
      EXPECT_EQ(std::get<ViableSet>(r).vectors, o);
      EXPECT_TRUE(oracle::closure_violations(o, net).empty());
    } else {
      EXPECT_FALSE(oracle::closure_violations(o, net).empty());
    }
  }
}

TEST(TypeC, ReversiblePairGivesSimplex) {
  auto net = reversible_from(QMatrix::of({{-1, 1}, {1, -1}}));
  auto set = type_c_viable_set(net);
  EXPECT_EQ(set.family, ConeFamily::simplex);
  EXPECT_EQ(set.vectors, (std::vector<QVector>{{0, 1}, {1, 0}}));
}

TEST(TypeC, DoubledColumnGivesCrossPolytope) {
  auto net = reversible_from(QMatrix::of({{-1, 2}, {1, 0}}));
  auto set = type_c_viable_set(net);
  EXPECT_EQ(set.family, ConeFamily::cross_polytope);
  EXPECT_EQ(set.vectors, (std::vector<QVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
}

TEST(TypeC, ElectronTransferReduced) {
  auto net = corpus_network("electron_transfer");
  auto rep = classify(net);
  auto red = reduced_network(net, *rep.factorization, true);
  auto set = type_c_viable_set(red);
  bool dependent = rank(red.gamma) < red.n();
  EXPECT_EQ(set.family, dependent ? ConeFamily::simplex : ConeFamily::cross_polytope);
  EXPECT_TRUE(oracle::closure_violations(set.vectors, red).empty());
}

TEST(TypeC, PreconditionsChecked) {
  EXPECT_THROW(type_c_viable_set(reversible_from(QMatrix::of({{-1}, {2}}))), std::invalid_argument);
}

TEST(Cubical, Example) {
  auto set = cubical_viable_set(reversible_from(cubical_N()));
  EXPECT_EQ(set.family, ConeFamily::cube);
  EXPECT_EQ(set.vectors.size(), 16u);
  EXPECT_NE(std::find(set.vectors.begin(), set.vectors.end(), QVector{0, 0, 0, 1, -1}), set.vectors.end());
  EXPECT_TRUE(oracle::closure_violations(set.vectors, reversible_from(cubical_N())).empty());
}

TEST(Cubical, SingleReaction) {
  // a reduced single reaction is one merged row; two private rows would break alignment
  EXPECT_THROW(cubical_viable_set(reversible_from(QMatrix::of({{-1}, {1}}))), std::invalid_argument);
  auto set = cubical_viable_set(reversible_from(QMatrix::of({{-1}})));
  EXPECT_EQ(set.vectors, (std::vector<QVector>{{-1}, {0}}));
}

TEST(Cubical, RandomInstancesAreCubes) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 20; ++t) {
    QMatrix N = gen::random_cubical(rng, 5);
    auto net = reversible_from(N);
    auto set = cubical_viable_set(net);
    EXPECT_EQ(set.vectors.size(), std::size_t(1) << N.cols());
    EXPECT_TRUE(oracle::closure_violations(set.vectors, net).empty());
  }
}

TEST(SubsetSum, ThreeCycle) {
  auto net = parse_network("A <-> B ; B <-> C ; C <-> A");
  auto set = subset_sum_viable_set(net);
  EXPECT_EQ(set.family, ConeFamily::subset_sum);
  EXPECT_EQ(set.vectors.size(), 7u);
  EXPECT_EQ(std::count(set.vectors.begin(), set.vectors.end(), QVector(3)), 1);
  EXPECT_TRUE(oracle::closure_violations(set.vectors, net).empty());
}

TEST(SubsetSum, RequiresTwoOppositeEntriesPerRow) {
  EXPECT_THROW(subset_sum_viable_set(parse_network("A <-> B ; A <-> C")), std::invalid_argument);
}

TEST(Lift, Examples) {
  auto c = lift({QVector{1, 0}, QVector{0, 1}}, false);
  EXPECT_EQ(sorted(c.generators), sorted({QVector{1, 0, 1}, QVector{0, 1, 1}}));
  auto s = lift({QVector{0}, QVector{1}}, true);
  EXPECT_EQ(sorted(s.generators), sorted({QVector{0, 1}, QVector{1, 1}, QVector{-1, 1}}));
  auto cube = lift_viable_set(cubical_viable_set(reversible_from(cubical_N())));
  EXPECT_EQ(cube.generators.size(), 16u);
  EXPECT_FALSE(cube.facet_hint.empty());
}

TEST(Lift, ViableSetWithZeroVertexIsSymmetrized) {
  bool sym = false;
  auto cone = lift_viable_set(cubical_viable_set(reversible_from(QMatrix::of({{-1}}))), &sym);
  EXPECT_TRUE(sym);
  EXPECT_EQ(sorted(cone.generators), sorted({QVector{-1, 1}, QVector{1, 1}}));
}

TEST(ApplyP, Examples) {
  ConeRepr c = lift({QVector{1, 0}, QVector{0, 1}}, false);
  EXPECT_EQ(apply_P(c, QMatrix::identity(2)).generators, c.generators);
  auto flipped = apply_P(c, QMatrix::of({{-1, 0}, {0, 1}}));
  EXPECT_EQ(flipped.generators[0][0], -c.generators[0][0]);
  EXPECT_EQ(flipped.generators[1][0], -c.generators[1][0]);

  auto net = corpus_network("competitive_binding");
  auto rep = classify(net);
  auto cc = construct_cone(net, rep);
  EXPECT_EQ(cc.reduced_cone.generators[0].size(), 4u);
  EXPECT_EQ(cc.cone.generators[0].size(), 6u);
  for (std::size_t g = 0; g < cc.cone.generators.size(); ++g) {
    QVector head(cc.reduced_cone.generators[g].begin(), cc.reduced_cone.generators[g].end() - 1);
    QVector mapped = rep.factorization->P * head;
    mapped.push_back(1);
    EXPECT_EQ(cc.cone.generators[g], mapped);
  }
  EXPECT_THROW(apply_P(c, QMatrix::identity(3)), std::invalid_argument);
}

TEST(Duals, SimplicialCone) {
  auto c = lift({QVector{0, 0}, QVector{1, 0}, QVector{0, 1}}, false);
  auto d = dual_generators(c);
  ASSERT_EQ(d.generators.size(), 3u);
  ASSERT_EQ(d.incidence.size(), 3u);
  for (const auto& inc : d.incidence) EXPECT_EQ(inc.size(), 2u);
}

TEST(Duals, OrthantSelfDual) {
  ConeRepr c;
  c.generators = {QVector{1, 0, 0}, QVector{0, 1, 0}, QVector{0, 0, 1}};
  EXPECT_EQ(sorted(dual_generators(c).generators), sorted(c.generators));
}

TEST(Duals, HintsAgreeWithDoubleDescription) {
  std::vector<std::string> names = kSmallCorpus;
  names.push_back("rkip");
  FacetOptions wide;
  wide.max_dimension = 16;
  for (const auto& name : names) {
    auto net = corpus_network(name);
    auto cc = construct_cone(net, classify(net), FamilyRequest::automatic, false);
    auto dd = dual_generators_dd(cc.reduced_cone, wide);
    EXPECT_EQ(sorted(cc.reduced_duals.generators), sorted(dd.generators)) << name;
    EXPECT_EQ(cc.reduced_duals.extreme_rays, dd.extreme_rays) << name;
  }
}

TEST(Duals, IncidenceIsExact) {
  for (const auto& name : kSmallCorpus) {
    auto net = corpus_network(name);
    auto cc = construct_cone(net, classify(net), FamilyRequest::automatic, false);
    const auto& d = cc.duals;
    for (const auto& a : d.generators)
      for (const auto& g : cc.cone.generators) ASSERT_GE(dot(a, g), 0) << name;
    for (std::size_t r = 0; r < d.extreme_rays.size(); ++r) {
      std::set<std::size_t> inc(d.incidence[r].begin(), d.incidence[r].end());
      for (std::size_t f = 0; f < d.generators.size(); ++f) {
        auto v = dot(d.generators[f], cc.cone.generators[d.extreme_rays[r]]);
        if (inc.count(f)) EXPECT_EQ(v, 0) << name;
        else EXPECT_GT(v, 0) << name;
      }
    }
  }
}

TEST(NormBall, OrthantSliceIsSymmetricSegment) {
  auto cone = lift({QVector{1, 0}, QVector{0, 1}}, false);
  auto ball = norm_ball(cone, {QVector{1, -1}});
  EXPECT_EQ(ball.anchor, (QVector{1, 1, 2}));
  EXPECT_TRUE(ball.slice_centrally_symmetric);
  EXPECT_EQ(sorted(ball.vertices), sorted({QVector{2, -2}, QVector{-2, 2}}));
  EXPECT_NEAR(gauge(ball, {1.0, -1.0}), 0.5, 1e-12);
  EXPECT_NEAR(gauge(ball, {-3.0, 3.0}), 1.5, 1e-12);
}

TEST(NormBall, HypothesesChecked) {
  auto cone = lift({QVector{1, 0}, QVector{0, 1}}, false);
  EXPECT_THROW(norm_ball(cone, {QVector{1, 0}}), GeometryError);  // S ⊄ span K
  ConeRepr flat;
  flat.generators = {QVector{1, 0}, QVector{0, 1}};
  EXPECT_THROW(norm_ball(flat, {QVector{1, 1}}), GeometryError);  // K ∩ S ≠ {0}
}

TEST(NormBall, SymmetricWithDimensionOfS) {
  for (const auto& name : kSmallCorpus) {
    auto net = corpus_network(name);
    auto cc = construct_cone(net, classify(net));
    const auto& ball = *cc.ball;
    std::set<QVector, QVectorLess> vs(ball.vertices.begin(), ball.vertices.end());
    for (const auto& v : ball.vertices) EXPECT_TRUE(vs.count(-v)) << name;
    std::vector<QVector> dirs;
    for (const auto& v : ball.vertices) dirs.push_back(v - ball.vertices.front());
    EXPECT_EQ(rank(dirs), rank(net.gamma)) << name;
    EXPECT_EQ(ball.dim, rank(net.gamma));
  }
}

TEST(Gauge, BasicValues) {
  auto net = corpus_network("three_body");
  auto cc = construct_cone(net, classify(net));
  const auto& ball = *cc.ball;
  EXPECT_EQ(gauge(ball, std::vector<double>(net.n(), 0.0)), 0.0);
  for (const auto& v : ball.vertices) EXPECT_NEAR(gauge(ball, dbl(v)), 1.0, 1e-12);
  EXPECT_THROW(gauge(ball, std::vector<double>(net.n(), 1.0)), std::domain_error);
}

TEST(Gauge, NormAxiomsAndExactAgreement) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> k(-20, 20);
  for (const auto& name : kSmallCorpus) {
    auto net = corpus_network(name);
    auto cc = construct_cone(net, classify(net));
    const auto& ball = *cc.ball;
    auto facets = norm_ball_facets(ball);
    auto basis = stoichiometric_basis(net);
    for (int t = 0; t < 40; ++t) {
      QVector qx(net.n()), qy(net.n());
      for (const auto& b : basis) {
        qx = qx + ratio(k(rng), 7) * b;
        qy = qy + ratio(k(rng), 5) * b;
      }
      auto x = dbl(qx), y = dbl(qy);
      double gx = gauge(ball, x), gy = gauge(ball, y);
      std::vector<double> s(x.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
      EXPECT_LE(gauge(ball, s), (gx + gy) * (1 + 1e-12) + 1e-15) << name;
      double a = u(rng) * 4;
      std::vector<double> ax(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) ax[i] = a * x[i];
      EXPECT_NEAR(gauge(ball, ax), std::abs(a) * gx, 1e-12 * std::max(1.0, std::abs(a) * gx)) << name;
      if (!is_zero(qx)) EXPECT_GT(gx, 0.0);
      EXPECT_NEAR(gx, gauge_exact(ball, facets, qx).get_d(), 1e-12 * std::max(1.0, gx)) << name;
    }
  }
}

TEST(TypeCDichotomy, FamilyFollowsRowRank) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 30; ++t) {
    auto net = reversible_from(gen::random_type_c(rng, 6));
    ViableSet set;
    try {
      set = type_c_viable_set(net);
    } catch (const GeometryError&) {
      continue;
    }
    bool independent = rank(net.gamma) == net.n();
    EXPECT_EQ(set.family, independent ? ConeFamily::cross_polytope : ConeFamily::simplex);
    EXPECT_TRUE(oracle::closure_violations(set.vectors, net).empty());
  }
}

// The map sending column i of N to e_i turns the cubical set into a translate of {0,1}^m.
TEST(CubeMap, OntoZeroOneTranslate) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 20; ++t) {
    QMatrix N = gen::random_cubical(rng, 5);
    auto set = cubical_viable_set(reversible_from(N));
    std::set<QVector, QVectorLess> image;
    for (const auto& a : set.vectors) {
      auto c = solve(N, a - set.vectors.front());
      ASSERT_TRUE(c);
      image.insert(*c);
    }
    QVector lo = *image.begin();
    for (const auto& c : image)
      for (std::size_t i = 0; i < c.size(); ++i) lo[i] = std::min(lo[i], c[i]);
    std::set<QVector, QVectorLess> shifted;
    for (const auto& c : image) {
      QVector s = c - lo;
      for (const auto& x : s) EXPECT_TRUE(x == 0 || x == 1);
      shifted.insert(s);
    }
    EXPECT_EQ(shifted.size(), std::size_t(1) << N.cols());
  }
}

TEST(Audit, ReportsMissingImages) {
  auto net = reversible_from(QMatrix::of({{-1, 1}, {1, -1}}));
  EXPECT_FALSE(audit_closure({QVector{1, 0}}, net).empty());
  EXPECT_TRUE(audit_closure({QVector{1, 0}, QVector{0, 1}}, net).empty());
}
