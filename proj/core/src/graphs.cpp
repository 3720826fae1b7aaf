#include "crn/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "crn/simplex.hpp"

namespace crn {

const char* to_string(EdgeSign s) {
  switch (s) {
    case EdgeSign::positive: return "positive";
    case EdgeSign::negative: return "negative";
    case EdgeSign::unsigned_: return "unsigned";
  }
  return "?";
}

bool SignedGraph::connected() const {
  if (nodes == 0) return true;
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(nodes, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push_back(v);
      }
  }
  return count == nodes;
}

bool Digraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(out[u].begin(), out[u].end(), v);
}

std::size_t Digraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& o : out) c += o.size();
  return c;
}

SignedGraph r_graph(const ReactionNetwork& net) {
  SignedGraph g;
  g.nodes = net.m();
  for (std::size_t a = 0; a < net.m(); ++a)
    for (std::size_t b = a + 1; b < net.m(); ++b) {
      SignedEdge e{a, b, EdgeSign::positive, {}, {}};
      for (std::size_t i = 0; i < net.n(); ++i) {
        int s = sgn(net.gamma(i, a)) * sgn(net.gamma(i, b));
        if (s > 0) e.same_sign_species.push_back(i);
        if (s < 0) e.opposite_sign_species.push_back(i);
      }
      if (e.same_sign_species.empty() && e.opposite_sign_species.empty()) continue;
      if (e.opposite_sign_species.empty())
        e.sign = EdgeSign::positive;
      else if (e.same_sign_species.empty())
        e.sign = EdgeSign::negative;
      else
        e.sign = EdgeSign::unsigned_;
      g.edges.push_back(std::move(e));
    }
  return g;
}

ReactionDigraph ri_graph(const ReactionNetwork& net) {
  ReactionDigraph g;
  g.nodes = net.m();
  g.out.resize(net.m());
  for (std::size_t i = 0; i < net.m(); ++i)
    for (std::size_t j = 0; j < net.m(); ++j) {
      if (i == j) continue;
      bool edge = false;
      for (std::size_t s = 0; s < net.n() && !edge; ++s) {
        if (sgn(net.gamma(s, i)) == 0) continue;
        // same ∂R pattern as bipartite_graph: species s influences the rate of j
        edge = sgn(net.reactants(s, j)) > 0 || (net.reversible[j] && sgn(net.products(s, j)) > 0);
      }
      if (edge) g.out[i].push_back(j);
    }
  return g;
}

BipartiteDigraph bipartite_graph(const ReactionNetwork& net) {
  BipartiteDigraph g;
  const std::size_t n = net.n(), m = net.m();
  g.species = n;
  g.nodes = n + m;
  g.out.resize(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(net.gamma(i, j)) != 0) g.out[i].push_back(n + j);
      // ∂Rⱼ/∂xᵢ ≢ 0: reactants always, products only in reversible reactions
      bool influences = sgn(net.reactants(i, j)) > 0 || (net.reversible[j] && sgn(net.products(i, j)) > 0);
      if (influences) g.out[n + j].push_back(i);
    }
  for (auto& o : g.out) std::sort(o.begin(), o.end());
  return g;
}

std::size_t scc_count(const Digraph& g) {
  // iterative Tarjan
  const std::size_t n = g.nodes;
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      if (next < g.out[u].size()) {
        std::size_t v = g.out[u][next++];
        if (index[v] == unvisited) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        ++components;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != u);
      }
      std::size_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return components;
}

bool strongly_connected(const Digraph& g) { return g.nodes >= 1 && scc_count(g) == 1; }

std::variant<std::vector<int>, SignConflict> orthant_sign_assignment(const SignedGraph& g) {
  struct Arc {
    std::size_t to;
    bool flips;
  };
  std::vector<std::vector<Arc>> adj(g.nodes);
  for (const auto& e : g.edges) {
    if (e.sign == EdgeSign::unsigned_)
      return SignConflict{{e.a, e.b, e.a}, "edge between reactions " + std::to_string(e.a + 1) + " and " +
                                               std::to_string(e.b + 1) + " is unsigned"};
    bool flips = e.sign == EdgeSign::positive;
    adj[e.a].push_back({e.b, flips});
    adj[e.b].push_back({e.a, flips});
  }
  std::vector<int> sigma(g.nodes, 0);
  std::vector<std::size_t> parent(g.nodes, static_cast<std::size_t>(-1));
  for (std::size_t root = 0; root < g.nodes; ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::deque<std::size_t> q{root};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& arc : adj[u]) {
        int want = arc.flips ? -sigma[u] : sigma[u];
        if (sigma[arc.to] == 0) {
          sigma[arc.to] = want;
          parent[arc.to] = u;
          q.push_back(arc.to);
        } else if (sigma[arc.to] != want) {
          // cycle: u → … → lca ← … ← arc.to, closed by the edge (arc.to, u)
          auto path_to_root = [&](std::size_t x) {
            std::vector<std::size_t> p{x};
            while (parent[x] != static_cast<std::size_t>(-1)) p.push_back(x = parent[x]);
            return p;
          };
          auto pu = path_to_root(u), pv = path_to_root(arc.to);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<std::size_t> cycle(pu.begin(), pu.end());
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
          cycle.push_back(u);
          return SignConflict{cycle, "cycle with an odd number of positive edges"};
        }
      }
    }
  }
  return sigma;
}

bool signed_loop_property(const SignedGraph& g) {
  return std::holds_alternative<std::vector<int>>(orthant_sign_assignment(g));
}

std::optional<QVector> positive_flux_vector(const QMatrix& gamma) {
  // v = 1 + w with w ≥ 0 and Γw = −Γ1
  const std::size_t n = gamma.rows(), m = gamma.cols();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(m));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      A[i][j] = gamma(i, j);
      b[i] -= gamma(i, j);
    }
  auto res = feasible_point<Rational>(A, b);
  if (res.status != LpStatus::optimal) return std::nullopt;
  QVector v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = res.x[j] + 1;
  return v;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const SignedGraph& g, const ReactionNetwork& net) {
  std::ostringstream os;
  os << "graph R {\n";
  for (std::size_t j = 0; j < g.nodes; ++j) os << "  r" << j << " [label=" << quoted(net.reaction_names[j]) << "];\n";
  for (const auto& e : g.edges) {
    const char* style = e.sign == EdgeSign::positive ? "color=blue" : e.sign == EdgeSign::negative ? "color=red" : "style=dashed";
    os << "  r" << e.a << " -- r" << e.b << " [" << style << ", label=" << quoted(to_string(e.sign)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ReactionDigraph& g, const ReactionNetwork& net) {
  std::ostringstream os;
  os << "digraph RI {\n";
  for (std::size_t j = 0; j < g.nodes; ++j) os << "  r" << j << " [label=" << quoted(net.reaction_names[j]) << "];\n";
  for (std::size_t u = 0; u < g.nodes; ++u)
    for (auto v : g.out[u]) os << "  r" << u << " -> r" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const BipartiteDigraph& g, const ReactionNetwork& net) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t i = 0; i < g.species; ++i) os << "  s" << i << " [shape=ellipse, label=" << quoted(net.species[i]) << "];\n";
  for (std::size_t j = 0; j < g.nodes - g.species; ++j)
    os << "  r" << j << " [shape=box, label=" << quoted(net.reaction_names[j]) << "];\n";
  auto name = [&](std::size_t u) {
    return u < g.species ? "s" + std::to_string(u) : "r" + std::to_string(u - g.species);
  };
  for (std::size_t u = 0; u < g.nodes; ++u)
    for (auto v : g.out[u]) os << "  " << name(u) << " -> " << name(v) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace crn
