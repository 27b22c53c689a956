#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jhall/fp_matrix.hpp"
#include "jhall/partition.hpp"

// Brute-force ground truth over F_2 and F_3. Modules are explicit nilpotent
// matrices acting on column vectors; subspaces are given by row bases.

namespace jhall::oracle {

/// An enumeration would exceed its hard cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMorphismBudget = std::uint64_t{1} << 20;
inline constexpr int kMaxHomDimension = 8;
inline constexpr int kMaxAppendixDimension = 6;

/// Largest |lambda| accepted by count_submodules at prime p.
int submodule_weight_cap(int p);

struct NilModule {
  int p = 2;
  Partition type;
  FpMatrix action;

  [[nodiscard]] int dim() const { return action.rows(); }
};

/// Jordan blocks of sizes lambda_1, lambda_2, ... with N e_j = e_{j+1}
/// inside each block.
NilModule jordan_module(const Partition& lambda, int p);

/// Partition whose conjugate has parts r_{k-1} - r_k, where ranks[k] is the
/// rank of N^k (ranks[0] the dimension) down to 0.
Partition type_from_ranks(const std::vector<int>& ranks);

Partition recover_type(const FpMatrix& action);
bool is_invariant(const FpMatrix& rows, const FpMatrix& action);
/// Isomorphism type of the submodule spanned by the rows.
Partition type_of_subspace(const FpMatrix& rows, const FpMatrix& action);
/// Isomorphism type of the quotient by the span of the rows.
Partition type_of_quotient(const FpMatrix& rows, const FpMatrix& action);

/// Every k-dimensional subspace of F_p^n, once each, as its reduced
/// row-echelon basis.
std::vector<FpMatrix> enumerate_subspaces(int n, int k, int p);

/// Basis of Hom(S^lambda, S^mu): each row is a dim(mu) x dim(lambda) matrix
/// X with X J_lambda = J_mu X, flattened row-major.
FpMatrix hom_space_basis(const Partition& lambda, const Partition& mu, int p);

int hom_dim_oracle(const Partition& lambda, const Partition& mu, int p);

/// |Aut(S^lambda)| over F_p by enumeration of End(S^lambda).
std::uint64_t aut_count(const Partition& lambda, int p, std::uint64_t budget = kMorphismBudget);

/// Keys are (M0, M1) pairs of partitions.
using TypeHistogram = std::map<std::pair<Partition, Partition>, std::uint64_t>;

/// Number of submodules of S^lambda per (quotient type, submodule type).
const TypeHistogram& submodule_histogram(const Partition& lambda, int p);

/// #{X subset S^lambda : X = S^nu, S^lambda / X = S^mu}.
std::uint64_t count_submodules(const Partition& lambda, const Partition& mu, const Partition& nu, int p);

/// #{l : S^lambda -> S^mu} per (type of ker l, type of coker l).
TypeHistogram classify_morphisms(const Partition& lambda, const Partition& mu, int p,
                                 std::uint64_t budget = kMorphismBudget);

struct SampleReport {
  int requested = 0;
  int accepted = 0;
  /// Samples discarded by the filter.
  long rejected = 0;
  int failures = 0;
  /// Distinct dimension triples among the accepted samples.
  int configurations = 0;

  [[nodiscard]] bool ok() const { return failures == 0 && accepted == requested; }
};

/// Random f: V1 -> V2 and g: V2 -> V3 over F_p, kept when ker g lies in
/// im f; checks rank f + rank g = dim V2 + rank(g f) on each kept pair.
/// Throws std::invalid_argument if no pair of those dimensions can pass the
/// filter.
SampleReport appendix_identity_check(int p, std::array<int, 3> dims, int trials, std::uint64_t seed);

/// As appendix_identity_check, but each attempt draws its dimensions
/// uniformly from 0..max_dim; runs until `trials` samples pass the filter.
SampleReport appendix_random_check(int p, int max_dim, int trials, std::uint64_t seed);

/// Random exact squares V1' -> V2 -> V3 over V1 -> V2 -> V3' in F_p^n:
/// checks exactness, commutativity and dim V1 + dim V3 = dim V2 + rank(g f).
SampleReport lemma_square_check(int p, int n, int trials, std::uint64_t seed);

}  // namespace jhall::oracle
