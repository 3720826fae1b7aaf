#include "crn/matrix.hpp"

#include <stdexcept>

namespace crn {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVector> r;
  for (const auto& row : rows) {
    QVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return from_rows(r);
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<QVector> QMatrix::columns() const {
  std::vector<QVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  QMatrix m(idx.size(), cols_);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t j = 0; j < cols_; ++j) m(a, j) = (*this)(idx[a], j);
  return m;
}

QMatrix QMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  QMatrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t b = 0; b < idx.size(); ++b) m(i, b) = (*this)(i, idx[b]);
  return m;
}

std::size_t QMatrix::nonzeros_in_row(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < cols_; ++j) c += sgn((*this)(i, j)) != 0;
  return c;
}

std::size_t QMatrix::nonzeros_in_column(std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows_; ++i) c += sgn((*this)(i, j)) != 0;
  return c;
}

bool QMatrix::has_zero_row() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (nonzeros_in_row(i) == 0) return true;
  return false;
}

bool QMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (nonzeros_in_column(j) == 0) return true;
  return false;
}

std::vector<std::vector<std::string>> QMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).get_str();
  return out;
}

std::vector<double> QMatrix::to_double_row_major() const {
  std::vector<double> out(data_.size());
  for (std::size_t k = 0; k < data_.size(); ++k) out[k] = data_[k].get_d();
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  QVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
  return y;
}

}  // namespace crn
