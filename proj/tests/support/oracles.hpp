#pragma once

// Reference implementations written directly from the definitions, sharing no code with
// the library beyond its value types. Slow by design.

#include <string>
#include <vector>

#include "crn/network.hpp"

namespace oracle {

using crn::QMatrix;
using crn::QVector;
using crn::Rational;

// Rows of reaction j that constrain its Q-regions.
std::vector<std::size_t> constrained_rows(const crn::ReactionNetwork& net, std::size_t j);
bool in_q1(const QVector& x, const QVector& g, const std::vector<std::size_t>& rows);
bool in_q2(const QVector& x, const QVector& g, const std::vector<std::size_t>& rows);
bool permissible(const QVector& x, const crn::ReactionNetwork& net);
// Violations of the directional closure rule; empty when the set is viable.
std::vector<std::string> closure_violations(const std::vector<QVector>& set, const crn::ReactionNetwork& net);
// Smallest set containing the seeds and closed under the directional rule (no caps).
std::vector<QVector> closure(const std::vector<QVector>& seeds, const crn::ReactionNetwork& net);

// Exact feasibility of {A x = b, x ≥ 0} by a dense Phase-I simplex with Bland's rule.
bool lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b);
bool in_hull(const QVector& p, const std::vector<QVector>& pts);
// Each distinct point tested against the hull of all other distinct points.
std::vector<QVector> extreme_points(const std::vector<QVector>& pts);

// Block rank + spanning-tree scaling + membership, returning whether Γ = PND is possible.
bool factorizable(const QMatrix& gamma);

// Reachability closure of a digraph given by adjacency lists.
bool strongly_connected(const std::vector<std::vector<std::size_t>>& adj);
std::vector<std::vector<std::size_t>> ri_adjacency(const crn::ReactionNetwork& net);
std::vector<std::vector<std::size_t>> bipartite_adjacency(const crn::ReactionNetwork& net);

// Undirected signed graph: sign +1, −1 or 0 (unsigned); every simple cycle checked for an
// even count of positive edges.
struct Edge {
  std::size_t a, b;
  int sign;
};
bool even_positive_cycles(std::size_t nodes, const std::vector<Edge>& edges);

// Facet normals of cone(gens) inside span(gens), by testing every (d−1)-subset of generators.
std::vector<QVector> facets_bruteforce(const std::vector<QVector>& gens);

}  // namespace oracle
