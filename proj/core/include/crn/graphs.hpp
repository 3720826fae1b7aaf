#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crn/network.hpp"

namespace crn {

enum class EdgeSign { positive, negative, unsigned_ };
const char* to_string(EdgeSign s);

struct SignedEdge {
  std::size_t a, b;  // a < b
  EdgeSign sign;
  std::vector<std::size_t> same_sign_species;
  std::vector<std::size_t> opposite_sign_species;
};

struct SignedGraph {
  std::size_t nodes = 0;
  std::vector<SignedEdge> edges;

  bool connected() const;
};

struct Digraph {
  std::size_t nodes = 0;
  std::vector<std::vector<std::size_t>> out;  // sorted adjacency

  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const;
};

// Nodes are reactions.
struct ReactionDigraph : Digraph {};
// Nodes 0..n−1 are species, n..n+m−1 reactions.
struct BipartiteDigraph : Digraph {
  std::size_t species = 0;
};

SignedGraph r_graph(const ReactionNetwork& net);
ReactionDigraph ri_graph(const ReactionNetwork& net);
BipartiteDigraph bipartite_graph(const ReactionNetwork& net);

std::size_t scc_count(const Digraph& g);
bool strongly_connected(const Digraph& g);

bool signed_loop_property(const SignedGraph& g);

struct SignConflict {
  std::vector<std::size_t> cycle;  // closed walk of reaction indices, first == last
  std::string reason;
};
std::variant<std::vector<int>, SignConflict> orthant_sign_assignment(const SignedGraph& g);

// v with Γv = 0 and v ≥ 1 componentwise, when one exists.
std::optional<QVector> positive_flux_vector(const QMatrix& gamma);

std::string to_dot(const SignedGraph& g, const ReactionNetwork& net);
std::string to_dot(const ReactionDigraph& g, const ReactionNetwork& net);
std::string to_dot(const BipartiteDigraph& g, const ReactionNetwork& net);

}  // namespace crn
