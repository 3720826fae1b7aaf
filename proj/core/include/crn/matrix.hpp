#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& d);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
  // Integer literal convenience, e.g. QMatrix::of({{1, 2}, {3, 4}}).
  static QMatrix of(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  std::vector<QVector> columns() const;
  QMatrix transpose() const;
  QMatrix select_rows(const std::vector<std::size_t>& idx) const;
  QMatrix select_columns(const std::vector<std::size_t>& idx) const;

  std::size_t nonzeros_in_row(std::size_t i) const;
  std::size_t nonzeros_in_column(std::size_t j) const;
  bool has_zero_row() const;
  bool has_zero_column() const;

  bool operator==(const QMatrix& other) const = default;

  std::vector<std::vector<std::string>> to_strings() const;
  std::vector<double> to_double_row_major() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);

}  // namespace crn
