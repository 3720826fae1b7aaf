#pragma once

#include <optional>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

struct RowEchelon {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
std::size_t rank(const std::vector<QVector>& vectors);

// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
// Basis of {y : yᵗ m = 0}.
std::vector<QVector> left_kernel(const QMatrix& m);

// Indices of a maximal independent subset, chosen greedily left to right.
std::vector<std::size_t> independent_columns(const QMatrix& m);
std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors);

// Some x with m x = b, if the system is consistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Exact orthogonal projection onto span(basis); basis vectors must be independent.
class SpanProjector {
 public:
  SpanProjector() = default;
  explicit SpanProjector(std::vector<QVector> basis);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  // Coefficients c with Σ cᵢ basisᵢ = projection of v.
  QVector coordinates(const QVector& v) const;
  QVector project(const QVector& v) const;
  bool contains(const QVector& v) const;

 private:
  std::vector<QVector> basis_;
  QMatrix gram_inverse_;
};

}  // namespace crn
