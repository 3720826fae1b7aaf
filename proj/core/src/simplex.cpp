#include "crn/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crn {

namespace {

template <class T>
struct Tol;

template <>
struct Tol<Rational> {
  static bool neg(const Rational& v) { return sgn(v) < 0; }
  static bool pos(const Rational& v) { return sgn(v) > 0; }
  static bool zero(const Rational& v) { return sgn(v) == 0; }
};

template <>
struct Tol<double> {
  static constexpr double eps = 1e-11;
  static bool neg(double v) { return v < -eps; }
  static bool pos(double v) { return v > eps; }
  static bool zero(double v) { return std::fabs(v) <= eps; }
};

template <class T>
class Tableau {
 public:
  Tableau(const std::vector<std::vector<T>>& A, const std::vector<T>& b) : m_(A.size()), n_(m_ ? A[0].size() : 0) {
    if (b.size() != m_) throw std::invalid_argument("simplex: rhs size mismatch");
    width_ = n_ + m_ + 1;
    t_.assign((m_ + 1) * width_, T(0));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (A[i].size() != n_) throw std::invalid_argument("simplex: ragged constraint matrix");
      bool flip = Tol<T>::neg(b[i]);
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = flip ? T(-A[i][j]) : A[i][j];
      at(i, n_ + i) = T(1);
      at(i, rhs()) = flip ? T(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
    allowed_ = n_ + m_;
    // phase-one costs: sum of artificials, priced out against the initial basis
    for (std::size_t j = 0; j < n_; ++j) {
      T s(0);
      for (std::size_t i = 0; i < m_; ++i) s -= at(i, j);
      cost(j) = s;
    }
    T s(0);
    for (std::size_t i = 0; i < m_; ++i) s -= at(i, rhs());
    cost(rhs()) = s;
  }

  // Returns false when unbounded.
  bool optimize() {
    const std::size_t budget = 50 * (m_ + allowed_) + 1000;
    for (std::size_t iter = 0; iter < budget; ++iter) {
      std::size_t enter = pick_entering(false);
      if (enter == npos) return true;
      std::size_t leave = pick_leaving(enter);
      if (leave == npos) return false;
      if (Tol<T>::zero(at(leave, rhs()))) {
        // degenerate step: re-select with Bland's rule so no cycle can form
        enter = pick_entering(true);
        leave = pick_leaving(enter);
        if (leave == npos) return false;
      }
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration budget exhausted");
  }

  bool phase_one_feasible() const { return !Tol<T>::neg(cost(rhs())) && Tol<T>::zero(cost(rhs())); }

  void start_phase_two(const std::vector<T>& c) {
    // drive artificial variables out of the basis, dropping redundant rows
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = npos;
      for (std::size_t j = 0; j < n_; ++j)
        if (!Tol<T>::zero(at(i, j))) {
          col = j;
          break;
        }
      if (col != npos) {
        pivot(i, col);
      } else {
        for (std::size_t j = 0; j < width_; ++j) at(i, j) = T(0);
        dead_.push_back(i);
      }
    }
    allowed_ = n_;
    for (std::size_t j = 0; j < width_; ++j) cost(j) = T(0);
    for (std::size_t j = 0; j < n_; ++j) cost(j) = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_dead(i)) continue;
      const T cb = basis_[i] < n_ ? c[basis_[i]] : T(0);
      if (Tol<T>::zero(cb)) continue;
      for (std::size_t j = 0; j < width_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  std::vector<T> solution() const {
    std::vector<T> x(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (!is_dead(i) && basis_[i] < n_) x[basis_[i]] = at(i, rhs());
    return x;
  }

  T objective() const { return T(-cost(rhs())); }
  std::size_t pivots() const { return pivots_; }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  T& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  T& cost(std::size_t j) { return t_[m_ * width_ + j]; }
  const T& cost(std::size_t j) const { return t_[m_ * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }
  bool is_dead(std::size_t i) const {
    for (auto d : dead_)
      if (d == i) return true;
    return false;
  }

  std::size_t pick_entering(bool bland) const {
    std::size_t best = npos;
    for (std::size_t j = 0; j < allowed_; ++j) {
      if (!Tol<T>::neg(cost(j))) continue;
      if (bland) return j;
      if (best == npos || cost(j) < cost(best)) best = j;
    }
    return best;
  }

  std::size_t pick_leaving(std::size_t enter) const {
    std::size_t best = npos;
    T best_ratio(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_dead(i) || !Tol<T>::pos(at(i, enter))) continue;
      T ratio = at(i, rhs()) / at(i, enter);
      if (best == npos || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const T inv = T(1) / at(r, c);
    for (std::size_t j = 0; j < width_; ++j)
      if (!Tol<T>::zero(at(r, j)) || j == c) at(r, j) *= inv;
    at(r, c) = T(1);
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      T& head = t_[i * width_ + c];
      if (Tol<T>::zero(head)) {
        head = T(0);
        continue;
      }
      const T f = head;
      for (std::size_t j = 0; j < width_; ++j) {
        const T& rv = at(r, j);
        if (!Tol<T>::zero(rv)) t_[i * width_ + j] -= f * rv;
      }
      head = T(0);
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_ = 0, allowed_ = 0, pivots_ = 0;
  std::vector<T> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> dead_;
};

}  // namespace

template <class T>
LpResult<T> minimize(const std::vector<std::vector<T>>& A, const std::vector<T>& b, const std::vector<T>& c) {
  LpResult<T> out;
  const std::size_t n = A.empty() ? c.size() : A[0].size();
  if (c.size() != n) throw std::invalid_argument("simplex: cost size mismatch");
  if (A.empty()) {
    out.x.assign(n, T(0));
    for (const auto& cj : c)
      if (Tol<T>::neg(cj)) {
        out.status = LpStatus::unbounded;
        return out;
      }
    out.status = LpStatus::optimal;
    return out;
  }
  Tableau<T> tab(A, b);
  tab.optimize();
  if (!tab.phase_one_feasible()) {
    out.status = LpStatus::infeasible;
    out.pivots = tab.pivots();
    return out;
  }
  tab.start_phase_two(c);
  bool bounded = tab.optimize();
  out.pivots = tab.pivots();
  out.status = bounded ? LpStatus::optimal : LpStatus::unbounded;
  out.x = tab.solution();
  out.objective = tab.objective();
  return out;
}

template <class T>
LpResult<T> feasible_point(const std::vector<std::vector<T>>& A, const std::vector<T>& b) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  return minimize<T>(A, b, std::vector<T>(n, T(0)));
}

template LpResult<Rational> minimize<Rational>(const std::vector<std::vector<Rational>>&, const std::vector<Rational>&,
                                               const std::vector<Rational>&);
template LpResult<double> minimize<double>(const std::vector<std::vector<double>>&, const std::vector<double>&,
                                           const std::vector<double>&);
template LpResult<Rational> feasible_point<Rational>(const std::vector<std::vector<Rational>>&,
                                                     const std::vector<Rational>&);
template LpResult<double> feasible_point<double>(const std::vector<std::vector<double>>&, const std::vector<double>&);

}  // namespace crn
