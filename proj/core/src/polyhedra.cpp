#include "crn/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "crn/linalg.hpp"
#include "crn/simplex.hpp"

namespace crn {

bool in_convex_hull(const QVector& p, const std::vector<QVector>& points) {
  if (points.empty()) return false;
  const std::size_t d = p.size(), k = points.size();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(k));
  std::vector<Rational> b(d + 1);
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t j = 0; j < k; ++j) A[t][j] = points[j][t];
    b[t] = p[t];
  }
  for (std::size_t j = 0; j < k; ++j) A[d][j] = 1;
  b[d] = 1;
  return feasible_point<Rational>(A, b).status == LpStatus::optimal;
}

std::vector<QVector> extreme_points(const std::vector<QVector>& points) {
  std::set<QVector, QVectorLess> unique(points.begin(), points.end());
  std::vector<QVector> kept(unique.begin(), unique.end());
  // Sequential removal: a point that is a convex combination of the remaining
  // ones is dropped; what survives is exactly the vertex set.
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<QVector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (in_convex_hull(kept[i], others))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return kept;
}

std::vector<QVector> distinct_directions(const std::vector<QVector>& vectors) {
  std::set<QVector, QVectorLess> dirs;
  for (const auto& v : vectors)
    if (!is_zero(v)) dirs.insert(primitive(v));
  return {dirs.begin(), dirs.end()};
}

bool is_pointed(const std::vector<QVector>& generators) {
  if (generators.empty()) return true;
  const std::size_t D = generators[0].size();
  for (std::size_t t = 0; t < D; ++t) {
    bool all_pos = std::all_of(generators.begin(), generators.end(), [&](const QVector& g) { return sgn(g[t]) > 0; });
    if (all_pos) return true;
  }
  // 0 ∈ conv(generators) exactly when the cone contains a line or a zero generator
  return !in_convex_hull(QVector(D), generators);
}

namespace {

using ZVector = std::vector<mpz_class>;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

ZVector to_integer_primitive(const QVector& v) {
  QVector p = primitive(v);
  ZVector z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = p[i].get_num();
  return z;
}

void make_primitive(ZVector& z) {
  mpz_class g = 0;
  for (const auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

mpz_class zdot(const ZVector& a, const ZVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

struct Ray {
  ZVector v;
  Bits zeros;
};

}  // namespace

std::vector<QVector> cone_facets(const std::vector<QVector>& generators, const FacetOptions& opts) {
  std::vector<QVector> gens = distinct_directions(generators);
  if (gens.empty()) throw GeometryError("cone has no nonzero generator");
  const std::size_t D = gens[0].size();
  std::vector<std::size_t> basis_idx = independent_subset(gens);
  const std::size_t d = basis_idx.size();
  if (d > opts.max_dimension)
    throw ResourceCapError("cone span dimension " + std::to_string(d) + " exceeds the cap of " +
                           std::to_string(opts.max_dimension));
  if (!is_pointed(gens)) throw GeometryError("cone is not pointed");

  std::vector<QVector> basis;
  for (auto i : basis_idx) basis.push_back(gens[i]);
  // coordinates: a set of d ambient indices on which the span projects injectively
  std::vector<std::size_t> coords = independent_columns(QMatrix::from_rows(basis));

  const std::size_t N = gens.size();
  std::vector<ZVector> rows(N);
  for (std::size_t g = 0; g < N; ++g) {
    QVector c(d);
    for (std::size_t t = 0; t < d; ++t) c[t] = gens[g][coords[t]];
    rows[g] = to_integer_primitive(c);
  }

  std::vector<Ray> rays;
  if (d == 1) {
    Ray r{ZVector{gens[0][coords[0]] > 0 ? mpz_class(1) : mpz_class(-1)}, Bits(N)};
    rays.push_back(r);
  } else {
    std::vector<QVector> qrows(N);
    for (std::size_t g = 0; g < N; ++g) qrows[g] = QVector(rows[g].begin(), rows[g].end());
    std::vector<std::size_t> init = independent_subset(qrows);
    // initial simplicial cone {α : A_I α ≥ 0}: rays are the columns of A_I⁻¹
    std::vector<QVector> sel;
    for (auto g : init) sel.push_back(qrows[g]);
    QMatrix AI = QMatrix::from_rows(sel);
    for (std::size_t k = 0; k < d; ++k) {
      QVector e(d);
      e[k] = 1;
      auto col = solve(AI, e);
      Ray r{to_integer_primitive(*col), Bits(N)};
      for (std::size_t t = 0; t < d; ++t)
        if (t != k) r.zeros.set(init[t]);
      rays.push_back(std::move(r));
    }
    std::vector<bool> used(N, false);
    for (auto g : init) used[g] = true;
    for (std::size_t h = 0; h < N; ++h) {
      if (used[h]) continue;
      std::vector<mpz_class> val(rays.size());
      std::vector<std::size_t> pos, neg;
      std::vector<Ray> next;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        val[r] = zdot(rows[h], rays[r].v);
        int s = sgn(val[r]);
        if (s > 0) pos.push_back(r);
        if (s < 0) neg.push_back(r);
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        int s = sgn(val[r]);
        if (s < 0) continue;
        Ray keep = rays[r];
        if (s == 0) keep.zeros.set(h);
        next.push_back(std::move(keep));
      }
      for (auto p : pos)
        for (auto q : neg) {
          Bits common = rays[p].zeros & rays[q].zeros;
          if (common.count() + 2 < d) continue;
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
            if (r != p && r != q && common.subset_of(rays[r].zeros)) adjacent = false;
          if (!adjacent) continue;
          ZVector v(d);
          mpz_class a = val[p], b = -val[q];
          for (std::size_t t = 0; t < d; ++t) v[t] = a * rays[q].v[t] + b * rays[p].v[t];
          make_primitive(v);
          common.set(h);
          next.push_back({std::move(v), std::move(common)});
          if (next.size() > opts.max_rays)
            throw ResourceCapError("double description exceeded " + std::to_string(opts.max_rays) + " rays");
        }
      rays = std::move(next);
    }
  }

  // back to ambient functionals living in span(K)
  SpanProjector proj(basis);
  std::set<QVector, QVectorLess> normals;
  for (const auto& r : rays) {
    QVector lifted(D);
    for (std::size_t t = 0; t < d; ++t) lifted[coords[t]] = Rational(r.v[t]);
    normals.insert(primitive(proj.project(lifted)));
  }
  return {normals.begin(), normals.end()};
}

std::vector<std::size_t> extreme_ray_indices(const std::vector<QVector>& generators,
                                             const std::vector<QVector>& facets) {
  if (generators.empty()) return {};
  const std::size_t d = rank(generators);
  std::vector<std::size_t> out;
  std::set<QVector, QVectorLess> seen;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (is_zero(generators[g])) continue;
    std::vector<QVector> tight;
    for (const auto& f : facets)
      if (sgn(dot(f, generators[g])) == 0) tight.push_back(f);
    bool extreme = d == 1 || (!tight.empty() && rank(tight) == d - 1);
    if (extreme && seen.insert(primitive(generators[g])).second) out.push_back(g);
  }
  return out;
}

}  // namespace crn
