#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/network.hpp"

namespace crn {

struct RowPartition {
  std::vector<std::vector<std::size_t>> blocks;  // ordered by smallest member
  std::vector<std::size_t> representative;       // lowest column whose support covers the block
  std::vector<std::size_t> block_of;             // row -> block
};

// Same nonzero support, and a constant sign of Γ_ki·Γ_kj over the columns where both are nonzero.
bool rows_related(const QMatrix& gamma, std::size_t i, std::size_t j);
RowPartition row_equivalence(const QMatrix& gamma);

namespace stage {
inline constexpr const char* zero_row = "zero row";
inline constexpr const char* rank_within_class = "rank>1 within class";
inline constexpr const char* inconsistent_scaling = "inconsistent scaling";
inline constexpr const char* membership = "not in S or S^t";
}  // namespace stage

struct StageFailure {
  std::string stage;
  std::string detail;
};

struct PPrime {
  QMatrix P_prime;  // n×r
  QMatrix N_prime;  // r×m
};
std::variant<PPrime, StageFailure> build_P_prime(const QMatrix& gamma, const RowPartition& part);

struct Rescaling {
  QVector D1;  // r positive entries
  QMatrix N;   // D1·N′·D2, entries in {−1,0,1}
  QVector D2;  // m positive entries
};
std::variant<Rescaling, StageFailure> rescale_to_alignment(const QMatrix& N_prime);

struct Membership {
  bool in_S = false;   // ≤ 2 nonzeros per column
  bool in_St = false;  // ≤ 2 nonzeros per row
};
Membership membership(const QMatrix& N);

enum class NClass { S, S_transpose, both };
const char* to_string(NClass c);

struct PNDFactorization {
  QMatrix P;   // n×r, one nonzero per row; each column's last nonzero is positive
  QMatrix N;   // r×m over {−1,0,1}
  QVector D;   // m positive diagonal entries
  NClass n_class = NClass::both;
  RowPartition partition;

  QMatrix product() const;
};

using NoFactorization = StageFailure;
std::variant<PNDFactorization, NoFactorization> pnd_factorize(const QMatrix& gamma);

bool is_aligned(const QMatrix& N);

enum class ConeFamily { cross_polytope, simplex, cube, subset_sum, custom, none };
const char* to_string(ConeFamily f);

struct ClassificationFlags {
  bool type_C = false;
  bool cubical = false;
  bool type_I_core = false;
  bool type_A = false;
  bool aligned_rows_le2 = false;
  bool aligned_cols_le2 = false;
};

struct ClassificationReport {
  bool factorizable = false;
  std::optional<PNDFactorization> factorization;
  std::optional<StageFailure> failure;
  ClassificationFlags flags;
  ConeFamily cone_family = ConeFamily::none;
  bool ri_strongly_connected = false;
  bool r_graph_connected = false;
  bool non_catalytic = false;
  bool theorem1_applies = false;
  std::vector<std::string> notes;
};

ClassificationReport classify(const ReactionNetwork& net);

}  // namespace crn
