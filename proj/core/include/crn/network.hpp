#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

// Species × reactions; gamma = products − reactants column by column.
// Every species occurs in some complex and every reaction changes something.
// A species may have a zero gamma row only when it acts purely as a catalyst.
struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<std::string> reaction_names;
  QMatrix reactants;
  QMatrix products;
  QMatrix gamma;
  std::vector<bool> reversible;
  std::vector<std::optional<double>> kf;
  std::vector<std::optional<double>> kr;
  std::string source;

  std::size_t n() const { return species.size(); }
  std::size_t m() const { return reaction_names.size(); }
  bool all_reversible() const;
  // Row i constrains the Q₁ test of reaction j: any support row when reversible,
  // reactant rows only when irreversible.
  bool constrains(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> species_index(std::string_view name) const;

  // Equality ignores `source`.
  bool operator==(const ReactionNetwork& other) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Validates the invariants and assembles gamma. Throws std::invalid_argument.
ReactionNetwork make_network(std::vector<std::string> species, std::vector<std::string> reaction_names,
                             QMatrix reactants, QMatrix products, std::vector<bool> reversible,
                             std::string source = {});
// Reactant/product matrices split from the signs of gamma (no catalysts).
ReactionNetwork network_from_gamma(const QMatrix& gamma, std::vector<bool> reversible,
                                   std::vector<std::string> species = {}, std::string source = {});

// `.crn` text, or the JSON matrix form when the first significant character is '{'.
ReactionNetwork parse_network(std::string_view text, std::string source = {});
ReactionNetwork parse_network_file(const std::string& path);
std::string serialize_crn(const ReactionNetwork& net);
std::string serialize_json(const ReactionNetwork& net);

// Each reversible reaction replaced by its forward and backward irreversible halves.
ReactionNetwork split_reversible(const ReactionNetwork& net);

bool is_non_catalytic(const ReactionNetwork& net);

enum class Region { Q2, Q1_plus, Q1_minus, none };
const char* to_string(Region r);

Region q_region_classify(const QVector& v, std::size_t j, const ReactionNetwork& net);
bool is_permissible(const QVector& v, const ReactionNetwork& net);

struct PermissibleOp {
  std::size_t reaction;
  int sign;  // +1: v + Γⱼ, −1: v − Γⱼ
  QVector result;
  bool operator==(const PermissibleOp&) const = default;
};

// Directional operations for every reaction with v ∉ Q₂(Γⱼ). Throws if v is not permissible.
std::vector<PermissibleOp> permissible_ops(const QVector& v, const ReactionNetwork& net);

struct CompatClass {
  std::vector<QVector> image_basis;
  std::vector<QVector> conservation_basis;
  QVector anchor;
};

CompatClass compat_class(const ReactionNetwork& net, const QVector& x0);

struct CompatiblePair {
  QVector x0;
  QVector y0;
  QVector w;  // y0 = x0 + Γ w
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// y0 = anchor + Γw with rational w; both points have every coordinate ≥ 1/20.
CompatiblePair sample_compatible_pair(const CompatClass& cls, const ReactionNetwork& net, std::mt19937_64& rng);

// Uniform on [0.1, 5]ⁿ.
std::vector<double> random_state(std::size_t n, std::mt19937_64& rng);
// Uniform on the grid {k/1000 : 100 ≤ k ≤ 5000}ⁿ.
QVector random_rational_state(std::size_t n, std::mt19937_64& rng);

// Independent generator for work item `index` under master seed `seed`.
std::mt19937_64 derive_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace crn
