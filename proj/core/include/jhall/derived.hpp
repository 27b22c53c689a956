#pragma once

#include <compare>
#include <string>

#include "jhall/hall.hpp"
#include "jhall/lincomb.hpp"
#include "jhall/partition.hpp"

namespace jhall {

/// Object M0 (+) M1[1] of the root category, recorded by its cohomology
/// partitions h0 = H^0 and h1 = H^1.
struct RootObject {
  Partition h0;
  Partition h1;

  [[nodiscard]] int k0_class() const { return h0.weight() - h1.weight(); }
  [[nodiscard]] int total_weight() const { return h0.weight() + h1.weight(); }
  /// "2,1;1", ";" for the zero object.
  [[nodiscard]] std::string to_string() const { return h0.to_string() + ";" + h1.to_string(); }

  friend auto operator<=>(const RootObject&, const RootObject&) = default;
  friend bool operator==(const RootObject&, const RootObject&) = default;
};

/// Which basis the keys of a DerivedElem refer to.
enum class DerivedBasis {
  /// (A, B) means u_[A (+) B[1]].
  Natural,
  /// (A, B) means the product u_[A] * u_[B[1]].
  Normal,
};

/// Element of the twisted derived Hall algebra of the root category.
struct DerivedElem {
  LinComb<RootObject> terms;
  DerivedBasis basis = DerivedBasis::Natural;

  friend bool operator==(const DerivedElem&, const DerivedElem&) = default;
};

namespace derived {

DerivedElem natural(const Partition& h0, const Partition& h1);
DerivedElem normal(const Partition& a, const Partition& b);
DerivedElem zero(DerivedBasis basis = DerivedBasis::Natural);

/// Number of l in Hom(L, Z) with ker l = M0 and coker l = M1:
/// sum_I G^L_{I,M0} G^Z_{M1,I} a_I.
Scalar count_maps_by_ker_coker(const Partition& L, const Partition& Z, const Partition& M0, const Partition& M1);

/// Product of elements supported on pure sectors (every term has h0 or h1
/// empty). Same-sector pairs multiply as Hall products inside H^0 or H^1;
/// u_[L] * u_[Z[1]] expands over the kernel/cokernel strata of Hom(L, Z) and
/// u_[Z[1]] * u_[L] uses the dual strata with the index roles exchanged.
/// Throws std::invalid_argument on a term with both h0 and h1 nonempty.
DerivedElem sector_product(const DerivedElem& x, const DerivedElem& y);

/// Natural basis -> normal basis. Each u_[A (+) B[1]] is peeled off the
/// expansion of u_[A] * u_[B[1]], whose other terms have strictly smaller
/// total weight (every nonzero map lowers |M0| + |M1| by twice its rank).
DerivedElem straighten(const DerivedElem& x);

/// Normal basis -> natural basis.
DerivedElem to_natural(const DerivedElem& x);

DerivedElem to_basis(const DerivedElem& x, DerivedBasis basis);

/// General product: both factors are brought to normal form and
/// (u_A * u_B[1]) * (u_C * u_D[1]) is evaluated as
/// (u_A * u_C') * (u_B'[1] * u_D[1]), where u_B[1] * u_C has been rewritten
/// as a normal-form combination of u_C' * u_B'[1].
DerivedElem derived_product(const DerivedElem& x, const DerivedElem& y,
                            DerivedBasis out = DerivedBasis::Natural);

DerivedElem psi_plus(const HallElem& x);
DerivedElem psi_minus(const HallElem& x);

struct RelationSides {
  DerivedElem lhs;
  DerivedElem rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// Both sides of the double relation for x = u_lambda, y = u_mu:
///   sum (x2, y1) Psi+(x1) * Psi-(y2)  and  sum (x1, y2) Psi-(y1) * Psi+(x2),
/// in the natural basis.
RelationSides dd_relation_sides(const Partition& lambda, const Partition& mu);
bool dd_relation_check(const Partition& lambda, const Partition& mu);

/// (u_A * u_B[1]) * (u_C * u_D[1]) == (u_A * u_C) * (u_B[1] * u_D[1]).
bool tensor_factorization_check(const Partition& a, const Partition& b, const Partition& c, const Partition& d);

/// All root objects with total weight <= n.
std::vector<RootObject> root_objects_up_to(int n);

}  // namespace derived
}  // namespace jhall
