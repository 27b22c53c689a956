#pragma once

#include <stdexcept>
#include <string>

#include "jhall/derived.hpp"
#include "jhall/hall.hpp"
#include "jhall/lincomb.hpp"
#include "jhall/partition.hpp"

namespace jhall {

enum class SymBasis {
  Monomial,
  Elementary,
  Power,
  /// Hall-Littlewood P_lambda(x; t) at t = q^{-1} = v^{-2}.
  HallLittlewood,
};

/// One-letter tag used in rendering: m, e, p, P.
char basis_letter(SymBasis b);

struct SymFunc {
  LinComb<Partition> terms;
  SymBasis basis = SymBasis::Monomial;

  [[nodiscard]] int degree() const;
  friend bool operator==(const SymFunc&, const SymFunc&) = default;
};

/// f (x) g with both legs expressed in the same basis.
struct TensorSymFunc {
  LinComb<PartitionPair> terms;
  SymBasis basis = SymBasis::Monomial;

  friend bool operator==(const TensorSymFunc&, const TensorSymFunc&) = default;
};

class DegreeBoundExceeded : public std::runtime_error {
 public:
  DegreeBoundExceeded(int degree, int bound);
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int bound() const { return bound_; }

 private:
  int degree_;
  int bound_;
};

/// Symmetric functions over Q(v) up to a degree bound.
///
/// Identities of degree <= N are decided in the monomial basis, which is
/// faithful once there are at least N variables. Transition tables are
/// shared process-wide and memoized; a SymRing only carries the bound and
/// the dominance extension used for Gram-Schmidt.
class SymRing {
 public:
  static constexpr int kDefaultDegreeBound = 8;

  explicit SymRing(int degree_bound = kDefaultDegreeBound,
                   DominanceExtension ext = DominanceExtension::ReverseLex);

  [[nodiscard]] int degree_bound() const { return bound_; }
  [[nodiscard]] DominanceExtension extension() const { return ext_; }

  [[nodiscard]] SymFunc basis_element(SymBasis basis, const Partition& lambda) const;
  [[nodiscard]] SymFunc one(SymBasis basis = SymBasis::Monomial) const;

  [[nodiscard]] SymFunc convert(const SymFunc& f, SymBasis target) const;
  /// Product, expressed in the basis of f.
  [[nodiscard]] SymFunc multiply(const SymFunc& f, const SymFunc& g) const;

  /// P_lambda(x; v^{-2}) in the monomial basis.
  [[nodiscard]] SymFunc hl_P(const Partition& lambda) const;
  /// Monomial coefficients of P_lambda as rational functions of t: the
  /// returned Scalars use their indeterminate for t, not v.
  [[nodiscard]] const LinComb<Partition>& hl_P_in_t(const Partition& lambda) const;

  /// <p_lambda, p_mu>_t = delta z_lambda prod_i (1 - t^{lambda_i})^{-1}, with
  /// the indeterminate of the Scalars standing for t.
  [[nodiscard]] Scalar hl_scalar_product_in_t(const LinComb<Partition>& f_monomial,
                                              const LinComb<Partition>& g_monomial) const;

  /// {p_lambda, p_mu} = delta z_lambda prod_i (q^{lambda_i} - 1)^{-1}.
  [[nodiscard]] Scalar power_sum_pairing(const SymFunc& f, const SymFunc& g) const;

  /// u_lambda -> q^{-n(lambda)} a_lambda P_lambda(x; q^{-1}); result in the
  /// Hall-Littlewood basis.
  [[nodiscard]] SymFunc psi(const HallElem& x) const;
  [[nodiscard]] HallElem psi_inv(const SymFunc& f) const;

  /// (psi (x) psi) applied to the normal form of x; legs in the
  /// Hall-Littlewood basis.
  [[nodiscard]] TensorSymFunc theta(const DerivedElem& x) const;
  [[nodiscard]] TensorSymFunc convert(const TensorSymFunc& f, SymBasis target) const;
  [[nodiscard]] TensorSymFunc multiply(const TensorSymFunc& f, const TensorSymFunc& g) const;

  /// Torsion generator T_{r,x} of a point x of residue degree d:
  /// zero unless d | r, else [r]_v (d/r) psi_x^{-1}(p_{r/d}) where psi_x is
  /// psi with q replaced by q^d.
  [[nodiscard]] HallElem torsion_T(int r, int d) const;

 private:
  void check_degree(int degree) const;
  void check(const SymFunc& f) const;

  int bound_;
  DominanceExtension ext_;
};

/// Weight prefactor q^{-n(lambda)} a_lambda of psi(u_lambda).
Scalar psi_scale(const Partition& lambda);

}  // namespace jhall
