#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// A configured size limit was hit (closure cap, dimension cap, ray cap).
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact LP: p = Σ λᵢ qᵢ, Σ λᵢ = 1, λ ≥ 0.
bool in_convex_hull(const QVector& p, const std::vector<QVector>& points);

// Vertices of conv(points). Duplicates are merged; the result is sorted lexicographically.
std::vector<QVector> extreme_points(const std::vector<QVector>& points);

// Distinct primitive directions of the nonzero inputs, sorted.
std::vector<QVector> distinct_directions(const std::vector<QVector>& vectors);

struct FacetOptions {
  std::size_t max_dimension = 12;
  std::size_t max_rays = 250000;
};

// Facet normals of cone(generators) inside its linear span, by double description.
// Each normal a lies in the span, is primitive, and satisfies ⟨a, g⟩ ≥ 0 for all generators.
// Throws ResourceCapError past the caps and GeometryError when the cone is not pointed.
std::vector<QVector> cone_facets(const std::vector<QVector>& generators, const FacetOptions& opts = {});

// True when some vector pairs positively with every generator (so the cone is pointed).
bool is_pointed(const std::vector<QVector>& generators);

// Generators that span extreme rays, one per direction, given a complete facet list.
std::vector<std::size_t> extreme_ray_indices(const std::vector<QVector>& generators,
                                             const std::vector<QVector>& facets);

}  // namespace crn
