#include "crn/network.hpp"

#include <algorithm>
#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

bool ReactionNetwork::all_reversible() const {
  return std::all_of(reversible.begin(), reversible.end(), [](bool r) { return r; });
}

bool ReactionNetwork::constrains(std::size_t i, std::size_t j) const {
  if (reversible[j]) return sgn(gamma(i, j)) != 0;
  return sgn(reactants(i, j)) > 0;
}

std::optional<std::size_t> ReactionNetwork::species_index(std::string_view name) const {
  for (std::size_t i = 0; i < species.size(); ++i)
    if (species[i] == name) return i;
  return std::nullopt;
}

bool ReactionNetwork::operator==(const ReactionNetwork& o) const {
  return species == o.species && reaction_names == o.reaction_names && reactants == o.reactants &&
         products == o.products && reversible == o.reversible && kf == o.kf && kr == o.kr;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ReactionNetwork make_network(std::vector<std::string> species, std::vector<std::string> reaction_names,
                             QMatrix reactants, QMatrix products, std::vector<bool> reversible, std::string source) {
  const std::size_t n = species.size(), m = reaction_names.size();
  if (n == 0 || m == 0) throw std::invalid_argument("network needs at least one species and one reaction");
  if (reactants.rows() != n || reactants.cols() != m || products.rows() != n || products.cols() != m ||
      reversible.size() != m)
    throw std::invalid_argument("network: inconsistent dimensions");
  ReactionNetwork net;
  net.gamma = QMatrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(reactants(i, j)) < 0 || sgn(products(i, j)) < 0)
        throw std::invalid_argument("negative stoichiometric coefficient for species '" + species[i] +
                                    "' in reaction '" + reaction_names[j] + "'");
      net.gamma(i, j) = products(i, j) - reactants(i, j);
    }
  for (std::size_t j = 0; j < m; ++j)
    if (net.gamma.nonzeros_in_column(j) == 0)
      throw std::invalid_argument("zero column: reaction '" + reaction_names[j] + "' changes no species");
  for (std::size_t i = 0; i < n; ++i) {
    bool appears = false;
    for (std::size_t j = 0; j < m && !appears; ++j)
      appears = sgn(reactants(i, j)) != 0 || sgn(products(i, j)) != 0;
    if (!appears) throw std::invalid_argument("zero row: species '" + species[i] + "' takes part in no reaction");
  }
  net.species = std::move(species);
  net.reaction_names = std::move(reaction_names);
  net.reactants = std::move(reactants);
  net.products = std::move(products);
  net.reversible = std::move(reversible);
  net.kf.assign(m, std::nullopt);
  net.kr.assign(m, std::nullopt);
  net.source = std::move(source);
  return net;
}

ReactionNetwork network_from_gamma(const QMatrix& gamma, std::vector<bool> reversible, std::vector<std::string> species,
                                   std::string source) {
  const std::size_t n = gamma.rows(), m = gamma.cols();
  if (species.empty())
    for (std::size_t i = 0; i < n; ++i) species.push_back("X" + std::to_string(i + 1));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < m; ++j) names.push_back("R" + std::to_string(j + 1));
  QMatrix reac(n, m), prod(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(gamma(i, j)) < 0) reac(i, j) = -gamma(i, j);
      if (sgn(gamma(i, j)) > 0) prod(i, j) = gamma(i, j);
    }
  return make_network(std::move(species), std::move(names), std::move(reac), std::move(prod), std::move(reversible),
                      std::move(source));
}

ReactionNetwork split_reversible(const ReactionNetwork& net) {
  std::vector<QVector> rc, pc;
  std::vector<std::string> names;
  std::vector<bool> rev;
  std::vector<std::optional<double>> kf;
  for (std::size_t j = 0; j < net.m(); ++j) {
    rc.push_back(net.reactants.column(j));
    pc.push_back(net.products.column(j));
    names.push_back(net.reversible[j] ? net.reaction_names[j] + "_fwd" : net.reaction_names[j]);
    rev.push_back(false);
    kf.push_back(net.kf[j]);
    if (net.reversible[j]) {
      rc.push_back(net.products.column(j));
      pc.push_back(net.reactants.column(j));
      names.push_back(net.reaction_names[j] + "_bwd");
      rev.push_back(false);
      kf.push_back(net.kr[j]);
    }
  }
  ReactionNetwork out = make_network(net.species, std::move(names), QMatrix::from_columns(rc, net.n()),
                                     QMatrix::from_columns(pc, net.n()), std::move(rev), net.source);
  out.kf = std::move(kf);
  return out;
}

bool is_non_catalytic(const ReactionNetwork& net) {
  for (std::size_t j = 0; j < net.m(); ++j)
    for (std::size_t i = 0; i < net.n(); ++i)
      if (sgn(net.reactants(i, j)) > 0 && sgn(net.products(i, j)) > 0) return false;
  return true;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Q2: return "Q2";
    case Region::Q1_plus: return "Q1_plus";
    case Region::Q1_minus: return "Q1_minus";
    case Region::none: return "NONE";
  }
  return "?";
}

Region q_region_classify(const QVector& v, std::size_t j, const ReactionNetwork& net) {
  if (v.size() != net.n()) throw std::invalid_argument("q_region_classify: dimension mismatch");
  if (j >= net.m()) throw std::out_of_range("q_region_classify: reaction index out of range");
  bool in_pos = true, in_neg = true;
  for (std::size_t i = 0; i < net.n(); ++i) {
    if (!net.constrains(i, j)) continue;
    int s = sgn(v[i]) * sgn(net.gamma(i, j));
    if (s < 0) in_pos = false;
    if (s > 0) in_neg = false;
  }
  if (in_pos && in_neg) return Region::Q2;
  if (in_pos) return Region::Q1_plus;
  if (in_neg) return Region::Q1_minus;
  return Region::none;
}

bool is_permissible(const QVector& v, const ReactionNetwork& net) {
  for (std::size_t j = 0; j < net.m(); ++j)
    if (q_region_classify(v, j, net) == Region::none) return false;
  return true;
}

std::vector<PermissibleOp> permissible_ops(const QVector& v, const ReactionNetwork& net) {
  if (!is_permissible(v, net)) throw std::invalid_argument("permissible_ops: input vector " + to_string(v) + " is not permissible");
  std::vector<PermissibleOp> ops;
  for (std::size_t j = 0; j < net.m(); ++j) {
    Region r = q_region_classify(v, j, net);
    if (r == Region::Q2) continue;
    const QVector col = net.gamma.column(j);
    const int s = r == Region::Q1_plus ? -1 : +1;
    QVector cand = s < 0 ? v - col : v + col;
    if (!is_permissible(cand, net)) continue;
    Region landed = q_region_classify(cand, j, net);
    bool ok = s < 0 ? (landed == Region::Q1_minus || landed == Region::Q2)
                    : (landed == Region::Q1_plus || landed == Region::Q2);
    if (ok) ops.push_back({j, s, std::move(cand)});
  }
  return ops;
}

CompatClass compat_class(const ReactionNetwork& net, const QVector& x0) {
  if (x0.size() != net.n()) throw std::invalid_argument("compat_class: dimension mismatch");
  for (const auto& x : x0)
    if (sgn(x) <= 0) throw std::invalid_argument("compat_class: anchor must be strictly positive");
  CompatClass cls;
  for (auto j : independent_columns(net.gamma)) cls.image_basis.push_back(net.gamma.column(j));
  cls.conservation_basis = left_kernel(net.gamma);
  cls.anchor = x0;
  return cls;
}

CompatiblePair sample_compatible_pair(const CompatClass& cls, const ReactionNetwork& net, std::mt19937_64& rng) {
  const Rational floor_value = ratio(1, 20);
  for (const auto& x : cls.anchor)
    if (x < floor_value) throw SamplingError("sample_compatible_pair: anchor below 1/20");
  std::uniform_int_distribution<long> pick(-1000, 1000);
  Rational scale = 1;
  constexpr int kAttempts = 400;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (attempt > 0 && attempt % 20 == 0) scale /= 2;
    QVector w(net.m());
    for (auto& wj : w) wj = scale * ratio(pick(rng), 1000);
    if (is_zero(w)) continue;
    QVector delta = net.gamma * w;
    if (is_zero(delta)) continue;
    QVector y = cls.anchor + delta;
    bool ok = std::all_of(y.begin(), y.end(), [&](const Rational& q) { return q >= floor_value; });
    if (ok) return {cls.anchor, std::move(y), std::move(w)};
  }
  throw SamplingError("sample_compatible_pair: no interior partner found after " + std::to_string(kAttempts) +
                      " draws");
}

std::vector<double> random_state(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::vector<double> x(n);
  for (auto& xi : x) xi = u(rng);
  return x;
}

QVector random_rational_state(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(100, 5000);
  QVector x(n);
  for (auto& xi : x) xi = ratio(u(rng), 1000);
  return x;
}

std::mt19937_64 derive_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace crn
