#include "crn/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace crn {

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(QMatrix::from_rows(vectors));
}

std::vector<QVector> nullspace(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<QVector> left_kernel(const QMatrix& m) { return nullspace(m.transpose()); }

std::vector<std::size_t> independent_columns(const QMatrix& m) { return rref(m).pivots; }

std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return {};
  return independent_columns(QMatrix::from_columns(vectors, vectors[0].size()));
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

namespace {

QMatrix invert(const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("invert: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace

SpanProjector::SpanProjector(std::vector<QVector> basis) : basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  QMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      gram(i, j) = dot(basis_[i], basis_[j]);
      gram(j, i) = gram(i, j);
    }
  gram_inverse_ = k ? invert(gram) : QMatrix();
}

QVector SpanProjector::coordinates(const QVector& v) const {
  const std::size_t k = basis_.size();
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = dot(basis_[i], v);
  return k ? gram_inverse_ * rhs : QVector{};
}

QVector SpanProjector::project(const QVector& v) const {
  QVector c = coordinates(v);
  QVector out(v.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(c[i]) != 0)
      for (std::size_t t = 0; t < v.size(); ++t) out[t] += c[i] * basis_[i][t];
  return out;
}

bool SpanProjector::contains(const QVector& v) const { return project(v) == v; }

}  // namespace crn
