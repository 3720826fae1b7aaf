#include "crn/factorize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "crn/graphs.hpp"
#include "crn/linalg.hpp"

namespace crn {

bool rows_related(const QMatrix& g, std::size_t i, std::size_t j) {
  int product_sign = 0;
  for (std::size_t k = 0; k < g.cols(); ++k) {
    int a = sgn(g(i, k)), b = sgn(g(j, k));
    if ((a == 0) != (b == 0)) return false;
    if (a == 0) continue;
    if (product_sign == 0)
      product_sign = a * b;
    else if (product_sign != a * b)
      return false;
  }
  return true;
}

RowPartition row_equivalence(const QMatrix& g) {
  // Canonical key: sign pattern normalized so the first nonzero is positive.
  std::map<std::vector<int>, std::size_t> key_to_block;
  RowPartition part;
  part.block_of.resize(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::vector<int> key(g.cols());
    int flip = 0;
    for (std::size_t k = 0; k < g.cols(); ++k) {
      int s = sgn(g(i, k));
      if (flip == 0 && s != 0) flip = s;
      key[k] = s * (flip == 0 ? 1 : flip);
    }
    auto [it, fresh] = key_to_block.emplace(key, part.blocks.size());
    if (fresh) {
      part.blocks.emplace_back();
      std::size_t rep = 0;
      while (rep < g.cols() && sgn(g(i, rep)) == 0) ++rep;
      part.representative.push_back(rep);
    }
    part.blocks[it->second].push_back(i);
    part.block_of[i] = it->second;
  }
  return part;
}

std::variant<PPrime, StageFailure> build_P_prime(const QMatrix& g, const RowPartition& part) {
  const std::size_t r = part.blocks.size();
  PPrime out{QMatrix(g.rows(), r), QMatrix(r, g.cols())};
  for (std::size_t b = 0; b < r; ++b) {
    const auto& rows = part.blocks[b];
    if (rank(g.select_rows(rows)) > 1) {
      std::ostringstream os;
      os << "rows {";
      for (std::size_t a = 0; a < rows.size(); ++a) os << (a ? "," : "") << rows[a] + 1;
      os << "} span a column space of dimension ≥ 2";
      return StageFailure{stage::rank_within_class, os.str()};
    }
    const std::size_t rep = part.representative[b];
    for (auto i : rows) out.P_prime(i, b) = g(i, rep);
    const std::size_t i0 = rows.front();
    for (std::size_t c = 0; c < g.cols(); ++c) out.N_prime(b, c) = g(i0, c) / out.P_prime(i0, b);
  }
  return out;
}

std::variant<Rescaling, StageFailure> rescale_to_alignment(const QMatrix& Np) {
  const std::size_t r = Np.rows(), m = Np.cols();
  std::vector<std::optional<Rational>> d1(r), d2(m);
  auto mismatch = [](const char* what, std::size_t idx) {
    return StageFailure{stage::inconsistent_scaling,
                        std::string("two magnitudes forced on ") + what + " " + std::to_string(idx + 1)};
  };
  // BFS over the bipartite nonzero pattern; nodes < r are rows, the rest columns.
  for (std::size_t anchor = 0; anchor < r; ++anchor) {
    if (d1[anchor]) continue;
    d1[anchor] = Rational(1);
    std::deque<std::size_t> queue{anchor};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (u < r) {
        for (std::size_t c = 0; c < m; ++c) {
          if (sgn(Np(u, c)) == 0) continue;
          Rational want = 1 / (*d1[u] * abs(Np(u, c)));
          if (!d2[c]) {
            d2[c] = want;
            queue.push_back(r + c);
          } else if (*d2[c] != want) {
            return mismatch("column", c);
          }
        }
      } else {
        const std::size_t c = u - r;
        for (std::size_t row = 0; row < r; ++row) {
          if (sgn(Np(row, c)) == 0) continue;
          Rational want = 1 / (*d2[c] * abs(Np(row, c)));
          if (!d1[row]) {
            d1[row] = want;
            queue.push_back(row);
          } else if (*d1[row] != want) {
            return mismatch("row", row);
          }
        }
      }
    }
  }
  Rescaling out{QVector(r), QMatrix(r, m), QVector(m)};
  for (std::size_t i = 0; i < r; ++i) out.D1[i] = *d1[i];
  for (std::size_t c = 0; c < m; ++c) {
    if (!d2[c]) return StageFailure{stage::inconsistent_scaling, "column " + std::to_string(c + 1) + " is zero"};
    out.D2[c] = *d2[c];
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m; ++c) out.N(i, c) = out.D1[i] * Np(i, c) * out.D2[c];
  return out;
}

Membership membership(const QMatrix& N) {
  Membership mem{true, true};
  for (std::size_t c = 0; c < N.cols(); ++c) mem.in_S = mem.in_S && N.nonzeros_in_column(c) <= 2;
  for (std::size_t i = 0; i < N.rows(); ++i) mem.in_St = mem.in_St && N.nonzeros_in_row(i) <= 2;
  return mem;
}

const char* to_string(NClass c) {
  switch (c) {
    case NClass::S: return "S";
    case NClass::S_transpose: return "S_transpose";
    case NClass::both: return "both";
  }
  return "?";
}

QMatrix PNDFactorization::product() const { return P * N * QMatrix::diagonal(D); }

std::variant<PNDFactorization, NoFactorization> pnd_factorize(const QMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g.nonzeros_in_row(i) == 0)
      return NoFactorization{stage::zero_row, "row " + std::to_string(i + 1) + " of the stoichiometric matrix is zero"};
  if (g.has_zero_column()) return NoFactorization{stage::zero_row, "the stoichiometric matrix has a zero column"};

  RowPartition part = row_equivalence(g);
  auto pp = build_P_prime(g, part);
  if (auto* f = std::get_if<StageFailure>(&pp)) return *f;
  const PPrime& pr = std::get<PPrime>(pp);
  auto rs = rescale_to_alignment(pr.N_prime);
  if (auto* f = std::get_if<StageFailure>(&rs)) return *f;
  const Rescaling& sc = std::get<Rescaling>(rs);
  Membership mem = membership(sc.N);
  if (!mem.in_S && !mem.in_St)
    return NoFactorization{stage::membership, "N has a column and a row with three or more nonzero entries"};

  PNDFactorization f;
  f.partition = part;
  f.N = sc.N;
  f.P = QMatrix(g.rows(), part.blocks.size());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
      if (sgn(pr.P_prime(i, b)) != 0) f.P(i, b) = pr.P_prime(i, b) / sc.D1[b];
  f.D.resize(g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) f.D[c] = 1 / sc.D2[c];
  // all sign freedom goes into P; each column ends on a positive entry
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    if (sgn(f.P(part.blocks[b].back(), b)) > 0) continue;
    for (auto i : part.blocks[b]) f.P(i, b) = -f.P(i, b);
    for (std::size_t c = 0; c < g.cols(); ++c) f.N(b, c) = -f.N(b, c);
  }
  f.n_class = mem.in_S && mem.in_St ? NClass::both : (mem.in_S ? NClass::S : NClass::S_transpose);
  if (f.product() != g) throw std::logic_error("pnd_factorize: PND differs from gamma");
  return f;
}

bool is_aligned(const QMatrix& N) {
  const std::size_t r = N.rows(), m = N.cols();
  for (std::size_t c = 0; c < m; ++c) {
    std::optional<Rational> mag;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(N(i, c)) == 0) continue;
      Rational a = abs(N(i, c));
      if (mag && *mag != a) return false;
      mag = a;
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      int same = 0, opposite = 0;
      for (std::size_t i = 0; i < r; ++i) {
        int s = sgn(N(i, a)) * sgn(N(i, b));
        same += s > 0;
        opposite += s < 0;
      }
      if (same > 1 || opposite > 1) return false;
    }
  for (std::size_t c = 0; c < m; ++c) {
    int priv = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(N(i, c)) != 0 && N.nonzeros_in_row(i) == 1) ++priv;
    if (priv > 1) return false;
  }
  return true;
}

const char* to_string(ConeFamily f) {
  switch (f) {
    case ConeFamily::cross_polytope: return "cross_polytope";
    case ConeFamily::simplex: return "simplex";
    case ConeFamily::cube: return "cube";
    case ConeFamily::subset_sum: return "subset_sum";
    case ConeFamily::custom: return "custom";
    case ConeFamily::none: return "none";
  }
  return "?";
}

namespace {

// A row of a type S matrix rescales into {−2..2}, so nonzero magnitudes within a
// row can only differ by a factor of 2.
std::optional<std::string> type_s_obstruction(const QMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t a = 0; a < g.cols(); ++a)
      for (std::size_t b = 0; b < g.cols(); ++b) {
        if (sgn(g(i, a)) == 0 || sgn(g(i, b)) == 0) continue;
        Rational q = abs(g(i, a)) / abs(g(i, b));
        if (q > 2) {
          std::ostringstream os;
          os << "not type S: row " << i + 1 << " has entries in ratio " << q.get_str() << ":1";
          return os.str();
        }
      }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const ReactionNetwork& net) {
  ClassificationReport rep;
  rep.non_catalytic = is_non_catalytic(net);
  if (!rep.non_catalytic) {
    for (std::size_t j = 0; j < net.m(); ++j)
      for (std::size_t i = 0; i < net.n(); ++i)
        if (sgn(net.reactants(i, j)) > 0 && sgn(net.products(i, j)) > 0)
          rep.notes.push_back("catalytic: species " + net.species[i] + " appears on both sides of reaction " +
                              net.reaction_names[j]);
  }
  SignedGraph rg = r_graph(net);
  rep.r_graph_connected = rg.connected();
  if (!rep.r_graph_connected) rep.notes.push_back("R-graph is not connected");
  rep.ri_strongly_connected = strongly_connected(ri_graph(net));
  if (!rep.ri_strongly_connected) rep.notes.push_back("RI-graph is not strongly connected");

  auto fr = pnd_factorize(net.gamma);
  if (auto* fail = std::get_if<NoFactorization>(&fr)) {
    rep.failure = *fail;
    rep.notes.push_back("no PND factorization (" + fail->stage + "): " + fail->detail);
  } else {
    rep.factorizable = true;
    const PNDFactorization& f = std::get<PNDFactorization>(fr);
    rep.factorization = f;
    const QMatrix& N = f.N;
    Membership mem = membership(N);
    const bool aligned = is_aligned(N);
    const std::size_t rk = rank(N);
    const bool cols_independent = rk == N.cols();
    const bool rows_independent = rk == N.rows();
    // N over {−1,0,1} rescales to ℓ₁ = 2 columns exactly when every column has one or two nonzeros
    rep.flags.type_C = mem.in_S;
    rep.flags.cubical = aligned && mem.in_St && cols_independent;
    rep.flags.type_A = mem.in_St && !cols_independent;
    rep.flags.type_I_core = mem.in_S && !rows_independent;
    rep.flags.aligned_rows_le2 = aligned && mem.in_St;
    rep.flags.aligned_cols_le2 = aligned && mem.in_S;
    if (mem.in_St)
      rep.cone_family = cols_independent ? ConeFamily::cube : ConeFamily::subset_sum;
    else
      rep.cone_family = rows_independent ? ConeFamily::cross_polytope : ConeFamily::simplex;
    if (!aligned) rep.notes.push_back("N is not aligned");
    if (rep.flags.cubical) {
      if (auto why = type_s_obstruction(net.gamma))
        rep.notes.push_back(*why);
      else
        rep.notes.push_back("type S membership undecided; cubical superclass detected");
    }
  }
  bool any_irreversible = false;
  for (bool r : net.reversible) any_irreversible = any_irreversible || !r;
  if (any_irreversible)
    rep.notes.push_back("irreversible reactions present: Q1 tests for them constrain reactant coordinates only");
  rep.theorem1_applies = rep.factorizable && rep.non_catalytic && rep.ri_strongly_connected;
  return rep;
}

}  // namespace crn
