#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace jhall {

/// An integer partition: a weakly decreasing list of positive parts.
/// Partitions index the isomorphism classes S^(lambda) of nilpotent
/// Jordan-quiver modules; the empty partition is the zero module.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero parts. Negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  /// (k, k, ..., k), r times.
  static Partition rectangle(int k, int r);
  /// (1^r)
  static Partition column(int r) { return rectangle(1, r); }

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  /// i-th part with 0-based index, 0 beyond the length.
  [[nodiscard]] int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  [[nodiscard]] int weight() const { return weight_; }

  [[nodiscard]] Partition conjugate() const;
  /// sum_i (i-1) lambda_i with 1-based i.
  [[nodiscard]] int n_stat() const;
  /// m_i(lambda) for i = 1..max part; index 0 unused.
  [[nodiscard]] std::vector<int> multiplicities() const;
  /// z_lambda = prod_i i^{m_i} m_i!
  [[nodiscard]] long long z_factor() const;

  /// "2,1" (no brackets); empty string for the zero partition.
  [[nodiscard]] std::string to_string() const;

  /// Lexicographic comparison of the part lists.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// lambda is dominated by mu. Throws std::invalid_argument on unequal weights.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// lambda/mu is a vertical strip of r boxes: mu inside lambda, at most one
/// box per row, |lambda| - |mu| = r.
bool vertical_strip(const Partition& lambda, const Partition& mu, int r);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All partitions of every weight 0..n, weight ascending, reverse
/// lexicographic within a weight.
std::vector<Partition> partitions_up_to(int n);

/// All lambda with lambda/mu a vertical r-strip.
std::vector<Partition> add_vertical_strip(const Partition& mu, int r);

/// A total order on partitions of one weight that refines dominance.
enum class DominanceExtension {
  /// Lexicographic on the parts.
  ReverseLex,
  /// Reverse lexicographic on the conjugates; differs from ReverseLex from
  /// weight 6 on, e.g. on (4,1,1) vs (3,3).
  ConjugateColex,
};

/// Partitions of n ordered from the largest to the smallest under `ext`.
std::vector<Partition> ordered_partitions(int n, DominanceExtension ext);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace jhall
