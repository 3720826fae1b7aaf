#include "crn/cones.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "crn/graphs.hpp"
#include "crn/linalg.hpp"
#include "crn/simplex.hpp"

namespace crn {

namespace {

using VecSet = std::set<QVector, QVectorLess>;

QVector unit(std::size_t n, std::size_t i, int s) {
  QVector e(n);
  e[i] = s;
  return e;
}

std::vector<QVector> to_vector(const VecSet& s) { return {s.begin(), s.end()}; }

// Calls f on every k-subset of {0..m−1} in lexicographic order; stops early when f returns false.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t m, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(m - k + i) / static_cast<double>(i);
  return r;
}

// Facets of o + Σ [0,1]·gⱼ from the hyperplanes spanned by generator subsets.
std::vector<AffineFacet> zonotope_facets(const QVector& o, const std::vector<QVector>& gens) {
  std::vector<std::size_t> bidx = independent_subset(gens);
  const std::size_t k = bidx.size(), m = gens.size();
  if (k == 0 || binomial(m, k - 1) > 2e5) return {};
  std::vector<QVector> basis;
  for (auto i : bidx) basis.push_back(gens[i]);
  VecSet normals;
  for_each_subset(m, k - 1, [&](const std::vector<std::size_t>& T) {
    QMatrix eq(T.size(), k);
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t i = 0; i < k; ++i) eq(a, i) = dot(basis[i], gens[T[a]]);
    std::vector<QVector> ns = nullspace(eq);
    if (ns.size() != 1) return true;  // subset not of rank k−1
    QVector alpha(o.size());
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(ns[0][i]) != 0) alpha = alpha + ns[0][i] * basis[i];
    alpha = primitive(alpha);
    for (const auto& x : alpha)
      if (sgn(x) != 0) {
        if (sgn(x) < 0) alpha = -alpha;
        break;
      }
    normals.insert(alpha);
    return true;
  });
  std::vector<AffineFacet> out;
  for (const auto& alpha : normals) {
    Rational base = dot(alpha, o), hi = base, lo = base;
    for (const auto& g : gens) {
      Rational s = dot(alpha, g);
      if (sgn(s) > 0) hi += s;
      if (sgn(s) < 0) lo += s;
    }
    out.push_back({alpha, hi});
    out.push_back({-alpha, -lo});
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<QVector> subset_sums(const QVector& offset, const std::vector<QVector>& gens) {
  const std::size_t m = gens.size();
  // 2^m vectors, bounded like a viable closure
  if ((std::uint64_t(1) << std::min<std::size_t>(m, 63)) > kDefaultClosureCap)
    throw ResourceCapError("subset enumeration over " + std::to_string(m) + " columns exceeds the cap of " +
                           std::to_string(kDefaultClosureCap) + " vectors");
  VecSet out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    QVector v = offset;
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1) v = v + gens[j];
    out.insert(std::move(v));
  }
  return to_vector(out);
}

}  // namespace

std::variant<ViableSet, ClosureFailure> viable_closure(const std::vector<QVector>& seeds, const ReactionNetwork& net,
                                                       std::size_t cap) {
  VecSet seen;
  std::deque<QVector> queue;
  for (const auto& s : seeds) {
    if (s.size() != net.n()) throw std::invalid_argument("viable_closure: seed dimension mismatch");
    if (!is_permissible(s, net)) throw std::invalid_argument("viable_closure: seed " + to_string(s) + " is not permissible");
    if (seen.insert(s).second) queue.push_back(s);
  }
  ViableSet out;
  while (!queue.empty()) {
    QVector v = std::move(queue.front());
    queue.pop_front();
    auto ops = permissible_ops(v, net);
    for (std::size_t j = 0; j < net.m(); ++j) {
      if (q_region_classify(v, j, net) == Region::Q2) continue;
      bool any = std::any_of(ops.begin(), ops.end(), [&](const PermissibleOp& op) { return op.reaction == j; });
      if (!any)
        return ClosureFailure{"dead end", "vector " + to_string(v) + " admits no permissible operation with reaction " +
                                              net.reaction_names[j]};
    }
    for (auto& op : ops) {
      if (!seen.insert(op.result).second) continue;
      if (seen.size() > cap)
        return ClosureFailure{"cap exceeded", "closure grew beyond " + std::to_string(cap) + " vectors"};
      out.closure_log.push_back({v, op.reaction, op.sign, op.result});
      queue.push_back(op.result);
    }
  }
  out.vectors = to_vector(seen);
  return out;
}

std::vector<std::string> audit_closure(const std::vector<QVector>& set, const ReactionNetwork& net) {
  std::vector<std::string> problems;
  VecSet members(set.begin(), set.end());
  for (const auto& v : set) {
    if (!is_permissible(v, net)) {
      problems.push_back(to_string(v) + " is not permissible");
      continue;
    }
    auto ops = permissible_ops(v, net);
    for (std::size_t j = 0; j < net.m(); ++j) {
      if (q_region_classify(v, j, net) == Region::Q2) continue;
      bool any = false;
      for (const auto& op : ops) {
        if (op.reaction != j) continue;
        any = true;
        if (!members.count(op.result))
          problems.push_back(to_string(v) + (op.sign > 0 ? " + " : " - ") + net.reaction_names[j] + " = " +
                             to_string(op.result) + " is missing");
      }
      if (!any) problems.push_back(to_string(v) + " has no permissible operation with " + net.reaction_names[j]);
    }
  }
  return problems;
}

ReactionNetwork reduced_network(const ReactionNetwork& net, const PNDFactorization& f, bool type_c_scaling) {
  const std::size_t r = f.N.rows(), m = f.N.cols();
  QMatrix Gr = f.N;
  if (type_c_scaling)
    for (std::size_t j = 0; j < m; ++j)
      if (f.N.nonzeros_in_column(j) == 1)
        for (std::size_t b = 0; b < r; ++b) Gr(b, j) *= 2;
  QMatrix reac(r, m), prod(r, m);
  std::vector<std::string> names;
  for (std::size_t b = 0; b < r; ++b) {
    std::string label;
    for (auto i : f.partition.blocks[b]) label += (label.empty() ? "" : "|") + net.species[i];
    names.push_back(label);
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(Gr(b, j)) == 0) continue;
      bool has_reactant = false;
      for (auto i : f.partition.blocks[b]) has_reactant = has_reactant || sgn(net.reactants(i, j)) > 0;
      if (has_reactant) {
        reac(b, j) = abs(Gr(b, j));
        prod(b, j) = Gr(b, j) + reac(b, j);
      } else {
        if (sgn(Gr(b, j)) < 0) throw std::logic_error("reduced_network: decreasing block without a reactant");
        prod(b, j) = Gr(b, j);
      }
    }
  }
  return make_network(std::move(names), net.reaction_names, std::move(reac), std::move(prod), net.reversible,
                      net.source);
}

ViableSet type_c_viable_set(const ReactionNetwork& net, std::size_t cap) {
  const QMatrix& G = net.gamma;
  for (std::size_t j = 0; j < net.m(); ++j) {
    Rational l1 = 0;
    for (std::size_t i = 0; i < net.n(); ++i) {
      require(is_integer(G(i, j)) && abs(G(i, j)) <= 2, "type C: entries must be integers in [-2, 2]");
      l1 += abs(G(i, j));
    }
    require(l1 == 2, "type C: every column must have l1-norm 2");
  }
  require(!G.has_zero_row(), "type C: zero row");
  std::size_t seed_row = 0;
  while (sgn(G(seed_row, 0)) == 0) ++seed_row;
  auto res = viable_closure({unit(net.n(), seed_row, 1)}, net, cap);
  if (auto* fail = std::get_if<ClosureFailure>(&res)) throw GeometryError("type C closure: " + fail->kind + ": " + fail->detail);
  ViableSet set = std::get<ViableSet>(std::move(res));

  // classify the closure as signed unit vectors
  std::map<std::size_t, std::set<int>> signs;
  bool signed_basis = true;
  for (const auto& v : set.vectors) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        ++nz;
        at = i;
      }
    if (nz != 1 || abs(v[at]) != 1) {
      signed_basis = false;
      break;
    }
    signs[at].insert(sgn(v[at]));
  }
  if (!signed_basis) {
    set.family = ConeFamily::custom;
    return set;
  }
  bool any_pair = false, all_pairs = true;
  for (const auto& [i, s] : signs) {
    any_pair = any_pair || s.size() == 2;
    all_pairs = all_pairs && s.size() == 2;
  }
  set.family = any_pair ? ConeFamily::cross_polytope : ConeFamily::simplex;
  std::vector<std::size_t> support;
  for (const auto& kv : signs) support.push_back(kv.first);
  if (set.family == ConeFamily::cross_polytope && all_pairs && support.size() <= 16) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << support.size()); ++mask) {
      QVector a(net.n());
      for (std::size_t t = 0; t < support.size(); ++t) a[support[t]] = (mask >> t & 1) ? -1 : 1;
      set.hull_facets.push_back({a, 1});
    }
  } else if (set.family == ConeFamily::simplex && support.size() >= 2) {
    for (const auto& [i, s] : signs) set.hull_facets.push_back({unit(net.n(), i, -*s.begin()), 0});
  }
  return set;
}

ViableSet cubical_viable_set(const ReactionNetwork& net) {
  const QMatrix& N = net.gamma;
  require(is_aligned(N), "cubical: matrix is not aligned");
  for (std::size_t i = 0; i < N.rows(); ++i) require(N.nonzeros_in_row(i) <= 2, "cubical: a row has more than two nonzeros");
  require(rank(N) == N.cols(), "cubical: columns are linearly dependent");
  QVector v(net.n());
  for (std::size_t i = 0; i < net.n(); ++i) {
    bool nonneg = true, nonpos = true;
    for (std::size_t j = 0; j < net.m(); ++j) {
      nonneg = nonneg && sgn(N(i, j)) >= 0;
      nonpos = nonpos && sgn(N(i, j)) <= 0;
    }
    v[i] = nonneg ? 1 : (nonpos ? -1 : 0);
  }
  if (is_zero(v)) throw GeometryError("cubical: base vertex v is zero");
  std::vector<QVector> steps;
  for (std::size_t j = 0; j < net.m(); ++j) steps.push_back(-N.column(j));
  ViableSet set;
  set.vectors = subset_sums(v, steps);
  set.family = ConeFamily::cube;
  set.hull_facets = zonotope_facets(v, steps);
  auto problems = audit_closure(set.vectors, net);
  if (!problems.empty()) throw GeometryError("cubical set is not closed: " + problems.front());
  return set;
}

ViableSet subset_sum_viable_set(const ReactionNetwork& net) {
  const QMatrix& N = net.gamma;
  require(is_aligned(N), "subset sum: matrix is not aligned");
  require(rank(N) < N.cols(), "subset sum: columns are linearly independent");
  auto sa = orthant_sign_assignment(r_graph(net));
  if (auto* c = std::get_if<SignConflict>(&sa)) throw std::invalid_argument("subset sum: no orthant sign assignment: " + c->reason);
  const auto& sigma = std::get<std::vector<int>>(sa);
  std::vector<QVector> R;
  for (std::size_t j = 0; j < net.m(); ++j) R.push_back(Rational(sigma[j]) * N.column(j));
  for (std::size_t i = 0; i < net.n(); ++i) {
    int pos = 0, neg = 0;
    for (const auto& col : R) {
      pos += sgn(col[i]) > 0;
      neg += sgn(col[i]) < 0;
    }
    require(pos == 1 && neg == 1, "subset sum: row " + std::to_string(i + 1) +
                                      " does not have exactly two nonzeros of opposite sign after sign assignment");
  }
  ViableSet set;
  set.vectors = subset_sums(QVector(net.n()), R);
  set.family = ConeFamily::subset_sum;
  set.hull_facets = zonotope_facets(QVector(net.n()), R);
  auto problems = audit_closure(set.vectors, net);
  if (!problems.empty()) throw GeometryError("subset-sum set is not closed: " + problems.front());
  return set;
}

ConeRepr lift(const std::vector<QVector>& points, bool symmetrize) {
  if (points.empty()) throw std::invalid_argument("lift: empty point set");
  VecSet all(points.begin(), points.end());
  if (symmetrize)
    for (const auto& p : points) all.insert(-p);
  ConeRepr cone;
  for (const auto& p : all) {
    QVector g = p;
    g.push_back(1);
    cone.generators.push_back(std::move(g));
  }
  cone.pointed = true;
  return cone;
}

ConeRepr lift_viable_set(const ViableSet& set, bool* symmetrized) {
  const auto& pts = set.vectors;
  if (pts.empty()) throw std::invalid_argument("lift_viable_set: empty set");
  bool hint_ok = !set.hull_facets.empty();
  for (const auto& f : set.hull_facets)
    for (const auto& p : pts)
      if (dot(f.a, p) > f.beta) hint_ok = false;

  std::vector<QVector> vertices;
  if (hint_ok) {
    std::vector<QVector> dirs;
    for (const auto& p : pts) dirs.push_back(p - pts.front());
    std::vector<QVector> aff;
    for (auto i : independent_subset(dirs)) aff.push_back(dirs[i]);
    const std::size_t k = aff.size();
    SpanProjector proj(aff);
    for (const auto& p : pts) {
      std::vector<QVector> tight;
      for (const auto& f : set.hull_facets)
        if (dot(f.a, p) == f.beta) tight.push_back(k ? proj.project(f.a) : f.a);
      if (k == 0 || rank(tight) >= k) vertices.push_back(p);
    }
  } else {
    vertices = extreme_points(pts);
  }
  const bool sym = std::any_of(vertices.begin(), vertices.end(), [](const QVector& v) { return is_zero(v); });
  if (symmetrized) *symmetrized = sym;
  ConeRepr cone;
  if (sym) {
    std::vector<QVector> both = vertices;
    for (const auto& v : vertices) both.push_back(-v);
    cone = lift(extreme_points(both), false);
  } else {
    cone = lift(vertices, false);
    if (hint_ok)
      for (const auto& f : set.hull_facets) {
        QVector a = -f.a;
        a.push_back(f.beta);
        cone.facet_hint.push_back(std::move(a));
      }
  }
  cone.family = set.family;
  return cone;
}

namespace {

std::vector<std::size_t> p_column_of_row(const QMatrix& P) {
  std::vector<std::size_t> col(P.rows(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < P.rows(); ++i) {
    for (std::size_t b = 0; b < P.cols(); ++b)
      if (sgn(P(i, b)) != 0) {
        if (col[i] != static_cast<std::size_t>(-1)) throw std::invalid_argument("apply_P: row with two nonzeros");
        col[i] = b;
      }
    if (col[i] == static_cast<std::size_t>(-1)) throw std::invalid_argument("apply_P: zero row in P");
  }
  return col;
}

QVector map_generator(const QMatrix& P, const QVector& g) {
  QVector head(g.begin(), g.end() - 1);
  QVector out = P * head;
  out.push_back(g.back());
  return out;
}

// a' = P̂ (P̂ᵗP̂)⁻¹ a, so ⟨a', P̂k⟩ = ⟨a, k⟩
QVector map_normal(const QMatrix& P, const std::vector<std::size_t>& col, const QVector& a) {
  std::vector<Rational> weight(P.cols());
  for (std::size_t i = 0; i < P.rows(); ++i) weight[col[i]] += P(i, col[i]) * P(i, col[i]);
  QVector out(P.rows() + 1);
  for (std::size_t i = 0; i < P.rows(); ++i) out[i] = P(i, col[i]) * a[col[i]] / weight[col[i]];
  out[P.rows()] = a.back();
  return primitive(out);
}

}  // namespace

ConeRepr apply_P(const ConeRepr& cone, const QMatrix& P) {
  if (cone.generators.empty()) return cone;
  if (cone.generators[0].size() != P.cols() + 1) throw std::invalid_argument("apply_P: shape mismatch");
  auto col = p_column_of_row(P);
  for (std::size_t b = 0; b < P.cols(); ++b)
    if (P.nonzeros_in_column(b) == 0) throw std::invalid_argument("apply_P: zero column in P");
  ConeRepr out;
  out.pointed = cone.pointed;
  out.family = cone.family;
  for (const auto& g : cone.generators) out.generators.push_back(map_generator(P, g));
  for (const auto& a : cone.facet_hint) out.facet_hint.push_back(map_normal(P, col, a));
  return out;
}

namespace {

DualGenerators finish_duals(const ConeRepr& cone, std::vector<QVector> facets, bool structural) {
  DualGenerators d;
  d.generators = std::move(facets);
  d.from_family_structure = structural;
  d.extreme_rays = extreme_ray_indices(cone.generators, d.generators);
  for (auto r : d.extreme_rays) {
    std::vector<std::size_t> inc;
    for (std::size_t f = 0; f < d.generators.size(); ++f)
      if (sgn(dot(d.generators[f], cone.generators[r])) == 0) inc.push_back(f);
    d.incidence.push_back(std::move(inc));
  }
  return d;
}

// Hint normals projected into span(K), or nothing when any fails to be a facet.
std::optional<std::vector<QVector>> validated_hint(const ConeRepr& cone) {
  if (cone.facet_hint.empty()) return std::nullopt;
  std::vector<QVector> basis;
  for (auto i : independent_subset(cone.generators)) basis.push_back(cone.generators[i]);
  const std::size_t d = basis.size();
  SpanProjector proj(basis);
  VecSet out;
  for (const auto& a0 : cone.facet_hint) {
    QVector a = primitive(proj.project(a0));
    if (is_zero(a)) return std::nullopt;
    std::vector<QVector> tight;
    for (const auto& g : cone.generators) {
      int s = sgn(dot(a, g));
      if (s < 0) return std::nullopt;
      if (s == 0) tight.push_back(g);
    }
    if (d > 1 && rank(tight) != d - 1) return std::nullopt;
    out.insert(std::move(a));
  }
  return to_vector(out);
}

}  // namespace

DualGenerators dual_generators(const ConeRepr& cone, const FacetOptions& opts) {
  if (auto hint = validated_hint(cone)) return finish_duals(cone, std::move(*hint), true);
  return dual_generators_dd(cone, opts);
}

DualGenerators dual_generators_dd(const ConeRepr& cone, const FacetOptions& opts) {
  return finish_duals(cone, cone_facets(cone.generators, opts), false);
}

DualGenerators apply_P(const DualGenerators& duals, const QMatrix& P) {
  auto col = p_column_of_row(P);
  DualGenerators out = duals;
  for (auto& a : out.generators) a = map_normal(P, col, a);
  return out;
}

NormBall norm_ball(const ConeRepr& cone, const std::vector<QVector>& S, std::size_t difference_cap) {
  if (cone.generators.empty()) throw GeometryError("norm_ball: empty cone");
  const std::size_t D = cone.generators[0].size();
  std::vector<QVector> Sl;
  for (const auto& s : S) {
    QVector v = s;
    if (v.size() + 1 == D) v.push_back(0);
    if (v.size() != D) throw std::invalid_argument("norm_ball: subspace dimension mismatch");
    Sl.push_back(std::move(v));
  }
  {
    std::vector<QVector> b;
    for (auto i : independent_subset(Sl)) b.push_back(Sl[i]);
    Sl = std::move(b);
  }
  const std::size_t k = Sl.size();
  const std::size_t span_k = rank(cone.generators);
  std::vector<QVector> both = cone.generators;
  both.insert(both.end(), Sl.begin(), Sl.end());
  if (rank(both) != span_k) throw GeometryError("norm_ball: S is not contained in span(K)");

  // K ∩ S = {0}: no convex combination of generators lies in S
  {
    std::vector<QVector> perp = left_kernel(k ? QMatrix::from_columns(Sl, D) : QMatrix(D, 1));
    const std::size_t G = cone.generators.size();
    std::vector<std::vector<Rational>> A(perp.size() + 1, std::vector<Rational>(G));
    std::vector<Rational> rhs(perp.size() + 1);
    for (std::size_t r = 0; r < perp.size(); ++r)
      for (std::size_t g = 0; g < G; ++g) A[r][g] = dot(perp[r], cone.generators[g]);
    for (std::size_t g = 0; g < G; ++g) A[perp.size()][g] = 1;
    rhs[perp.size()] = 1;
    if (feasible_point<Rational>(A, rhs).status == LpStatus::optimal)
      throw GeometryError("norm_ball: K meets S outside the origin");
  }

  NormBall ball;
  ball.subspace_basis.clear();
  for (const auto& s : Sl) ball.subspace_basis.emplace_back(s.begin(), s.end() - 1);
  ball.anchor = QVector(D);
  for (const auto& g : cone.generators) ball.anchor = ball.anchor + g;

  std::vector<QVector> slice;
  if (span_k == k + 1) {
    // span K = S ⊕ ⟨b⟩: each generator g = s + c·b meets the slice at g / c
    std::vector<QVector> cols = Sl;
    cols.push_back(ball.anchor);
    QMatrix M = QMatrix::from_columns(cols, D);
    VecSet pts;
    for (const auto& g : cone.generators) {
      auto coef = solve(M, g);
      if (!coef) throw std::logic_error("norm_ball: generator outside S ⊕ b");
      const Rational& c = coef->back();
      if (sgn(c) <= 0) throw GeometryError("norm_ball: unbounded slice (generator with nonpositive anchor coefficient)");
      pts.insert((1 / c) * g);
    }
    slice = to_vector(pts);
    if (cone.family == ConeFamily::custom && slice.size() <= 2000) slice = extreme_points(slice);
  } else {
    // general slice: vertices of {y : b + Σ yᵢsᵢ ∈ K} by double description on the homogenized system
    std::vector<QVector> facets = cone_facets(cone.generators);
    std::vector<QVector> rows;
    for (const auto& a : facets) {
      QVector r(k + 1);
      for (std::size_t i = 0; i < k; ++i) r[i] = dot(a, Sl[i]);
      r[k] = dot(a, ball.anchor);
      rows.push_back(std::move(r));
    }
    rows.push_back(unit(k + 1, k, 1));
    VecSet pts;
    for (const auto& ray : cone_facets(rows)) {
      if (sgn(ray[k]) <= 0) throw GeometryError("norm_ball: unbounded slice");
      QVector x = ball.anchor;
      for (std::size_t i = 0; i < k; ++i) x = x + (ray[i] / ray[k]) * Sl[i];
      pts.insert(std::move(x));
    }
    slice = to_vector(pts);
  }
  if (slice.empty()) throw GeometryError("norm_ball: empty slice");
  ball.slice_vertices = slice;

  // H = P − P; for a centrally symmetric P with centre c this is 2(P − c)
  QVector centre(D);
  for (const auto& p : slice) centre = centre + p;
  centre = ratio(1, static_cast<long>(slice.size())) * centre;
  VecSet slice_set(slice.begin(), slice.end());
  bool symmetric = true;
  for (const auto& p : slice)
    if (!slice_set.count(Rational(2) * centre - p)) {
      symmetric = false;
      break;
    }
  ball.slice_centrally_symmetric = symmetric;
  VecSet hv;
  if (symmetric) {
    for (const auto& p : slice) hv.insert(Rational(2) * (p - centre));
  } else {
    if (slice.size() * (slice.size() - 1) > difference_cap)
      throw ResourceCapError("norm_ball: too many slice differences for an exact hull");
    for (const auto& p : slice)
      for (const auto& q : slice)
        if (&p != &q) hv.insert(p - q);
    auto ext = extreme_points(to_vector(hv));
    hv = VecSet(ext.begin(), ext.end());
  }
  for (const auto& h : hv) ball.vertices.emplace_back(h.begin(), h.end() - 1);

  // numeric cache
  ball.dim = k;
  const std::size_t n = D - 1;
  SpanProjector proj(ball.subspace_basis);
  ball.basis_d.clear();
  for (const auto& s : ball.subspace_basis) ball.basis_d.push_back(to_double(s));
  // coordinate map (BᵗB)⁻¹Bᵗ, built column by column from unit vectors
  ball.coord_map.assign(k, std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) {
    QVector c = proj.coordinates(unit(n, t, 1));
    for (std::size_t i = 0; i < k; ++i) ball.coord_map[i][t] = c[i].get_d();
  }
  ball.vertex_coords.assign(k, std::vector<double>(ball.vertices.size(), 0.0));
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    QVector c = proj.coordinates(ball.vertices[v]);
    for (std::size_t i = 0; i < k; ++i) ball.vertex_coords[i][v] = c[i].get_d();
  }
  return ball;
}

double gauge(const NormBall& ball, const std::vector<double>& x) {
  const std::size_t n = ball.basis_d.empty() ? x.size() : ball.basis_d[0].size();
  if (x.size() != n) throw std::invalid_argument("gauge: dimension mismatch");
  const std::size_t k = ball.dim;
  std::vector<double> y(k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < n; ++t) y[i] += ball.coord_map[i][t] * x[t];
  double xnorm = 0.0, resid = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double r = x[t];
    for (std::size_t i = 0; i < k; ++i) r -= y[i] * ball.basis_d[i][t];
    xnorm = std::max(xnorm, std::fabs(x[t]));
    resid = std::max(resid, std::fabs(r));
  }
  if (xnorm == 0.0) return 0.0;
  // absolute floor: differences of converged trajectories are pure roundoff
  if (resid > 1e-9 * std::max(1.0, xnorm)) throw std::domain_error("gauge: vector is not in span(S)");
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0.0;
  for (double& v : y) v /= scale;
  const std::size_t p = ball.vertices.size();
  std::vector<std::vector<double>> A(k, std::vector<double>(p));
  for (std::size_t i = 0; i < k; ++i) A[i] = ball.vertex_coords[i];
  auto res = minimize<double>(A, y, std::vector<double>(p, 1.0));
  if (res.status != LpStatus::optimal) throw std::runtime_error("gauge: LP did not reach an optimum");
  return res.objective * scale;
}

std::vector<QVector> norm_ball_facets(const NormBall& ball, const FacetOptions& opts) {
  SpanProjector proj(ball.subspace_basis);
  std::vector<QVector> lifted;
  for (const auto& v : ball.vertices) {
    QVector c = proj.coordinates(v);
    c.push_back(1);
    lifted.push_back(std::move(c));
  }
  std::vector<QVector> out;
  for (const auto& a : cone_facets(lifted, opts)) {
    // (−φ·β, β) ↦ φ with ⟨φ, y⟩ ≤ 1
    const Rational& beta = a.back();
    if (sgn(beta) <= 0) throw GeometryError("norm_ball_facets: origin is not interior to H");
    QVector phi(a.begin(), a.end() - 1);
    out.push_back((Rational(-1) / beta) * phi);
  }
  return out;
}

Rational gauge_exact(const NormBall& ball, const std::vector<QVector>& facets, const QVector& x) {
  SpanProjector proj(ball.subspace_basis);
  if (!proj.contains(x)) throw std::domain_error("gauge_exact: vector is not in span(S)");
  QVector y = proj.coordinates(x);
  Rational best = 0;
  for (const auto& phi : facets) best = std::max(best, Rational(dot(phi, y)));
  return best;
}

}  // namespace crn
