#pragma once

#include <cstddef>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<T> x;
  T objective{};
  std::size_t pivots = 0;
};

// minimize cᵗx subject to A x = b, x ≥ 0 (two-phase tableau simplex).
// Degenerate pivots follow Bland's rule, so the method terminates.
// Instantiated for Rational (exact) and double (absolute tolerance 1e-11 on scaled data).
template <class T>
LpResult<T> minimize(const std::vector<std::vector<T>>& A, const std::vector<T>& b, const std::vector<T>& c);

// Feasibility of A x = b, x ≥ 0; returns a vertex solution when feasible.
template <class T>
LpResult<T> feasible_point(const std::vector<std::vector<T>>& A, const std::vector<T>& b);

}  // namespace crn
