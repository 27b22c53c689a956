#include "jhall/derived.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "jhall/euler_form.hpp"
#include "jhall/memo.hpp"
#include "jhall/qcombinatorics.hpp"

namespace jhall::derived {
namespace {

using Terms = LinComb<RootObject>;

enum class Sector { Zero, One };

Sector sector_of(const RootObject& o) {
  if (o.h1.empty()) return Sector::Zero;
  if (o.h0.empty()) return Sector::One;
  throw std::invalid_argument("sector_product: mixed object u[" + o.to_string() + "]; use derived_product");
}

const Scalar& cached_aut(const Partition& p) {
  static MemoCache<Partition, Scalar> cache;
  return cache.get_or_compute(p, [&] { return aut_order(p); });
}

Terms from_hall(const HallElem& h, bool shifted) {
  Terms t;
  for (const auto& [p, c] : h) t.add(shifted ? RootObject{{}, p} : RootObject{p, {}}, c);
  return t;
}

// u_[L] * u_[Z[1]] in the natural basis.
const Terms& mixed_expansion(const Partition& L, const Partition& Z) {
  static MemoCache<std::pair<Partition, Partition>, Terms> cache;
  return cache.get_or_compute({L, Z}, [&] {
    const EulerForm& form = EulerForm::jordan();
    Terms t;
    const Scalar outer = form.half(L.weight(), Z.weight()).inverse();
    for (int r = 0; r <= std::min(L.weight(), Z.weight()); ++r)
      for (const auto& m0 : partitions_of(L.weight() - r))
        for (const auto& m1 : partitions_of(Z.weight() - r)) {
          Scalar c = count_maps_by_ker_coker(L, Z, m0, m1);
          if (c.is_zero()) continue;
          t.add({m0, m1}, c * outer / form.value(m0.weight(), m1.weight()));
        }
    return t;
  });
}

// u_[L[1]] * u_[Z] in the natural basis: the strata of Hom(L[1], Z[1]) with
// G^Z_{M0,I} G^L_{I,M1} in place of G^Z_{I,M0} G^L_{M1,I}.
const Terms& dual_mixed_expansion(const Partition& L, const Partition& Z) {
  static MemoCache<std::pair<Partition, Partition>, Terms> cache;
  return cache.get_or_compute({L, Z}, [&] {
    const EulerForm& form = EulerForm::jordan();
    Terms t;
    const Scalar outer = form.half(L.weight(), Z.weight()).inverse();
    for (int r = 0; r <= std::min(L.weight(), Z.weight()); ++r)
      for (const auto& m0 : partitions_of(Z.weight() - r))
        for (const auto& m1 : partitions_of(L.weight() - r)) {
          Scalar c;
          for (const auto& i : partitions_of(r)) {
            Scalar g = hall::hall_number(Z, m0, i);
            if (g.is_zero()) continue;
            c += g * hall::hall_number(L, i, m1) * cached_aut(i);
          }
          if (c.is_zero()) continue;
          t.add({m0, m1}, c * outer / form.value(m0.weight(), m1.weight()).pow(2));
        }
    return t;
  });
}

Terms sector_basis_product(const RootObject& x, const RootObject& y) {
  const Sector sx = sector_of(x);
  const Sector sy = sector_of(y);
  if (sx == Sector::Zero && sy == Sector::Zero)
    return from_hall(hall::product(hall::basis(x.h0), hall::basis(y.h0)), false);
  if (sx == Sector::One && sy == Sector::One)
    return from_hall(hall::product(hall::basis(x.h1), hall::basis(y.h1)), true);
  if (sx == Sector::Zero) return mixed_expansion(x.h0, y.h1);
  return dual_mixed_expansion(x.h1, y.h0);
}

// Normal-form coordinates of u_[A (+) B[1]].
const Terms& straighten_basis(const RootObject& o) {
  static MemoCache<RootObject, Terms> cache;
  return cache.get_or_compute(o, [&] {
    const Terms& expansion = mixed_expansion(o.h0, o.h1);
    const Scalar diag = expansion.coefficient(o);
    if (diag.is_zero()) throw std::logic_error("straighten: missing leading term for u[" + o.to_string() + "]");
    Terms res(o);
    for (const auto& [m, c] : expansion) {
      if (m == o) continue;
      if (m.total_weight() >= o.total_weight())
        throw std::logic_error("straighten: correction term does not lower the total weight");
      res.add_scaled(straighten_basis(m), -c);
    }
    res *= diag.inverse();
    return res;
  });
}

// Normal-form coordinates of (u_A * u_B[1]) * (u_C * u_D[1]).
const Terms& normal_basis_product(const RootObject& x, const RootObject& y) {
  static MemoCache<std::pair<RootObject, RootObject>, Terms> cache;
  return cache.get_or_compute({x, y}, [&] {
    Terms middle;
    for (const auto& [m, c] : dual_mixed_expansion(x.h1, y.h0)) middle.add_scaled(straighten_basis(m), c);
    Terms res;
    for (const auto& [m, c] : middle) {
      const HallElem left = hall::product(hall::basis(x.h0), hall::basis(m.h0));
      const HallElem right = hall::product(hall::basis(m.h1), hall::basis(y.h1));
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) res.add({a, b}, c * ca * cb);
    }
    return res;
  });
}

}  // namespace

DerivedElem natural(const Partition& h0, const Partition& h1) {
  return {Terms(RootObject{h0, h1}), DerivedBasis::Natural};
}

DerivedElem normal(const Partition& a, const Partition& b) { return {Terms(RootObject{a, b}), DerivedBasis::Normal}; }

DerivedElem zero(DerivedBasis basis) { return {Terms(), basis}; }

Scalar count_maps_by_ker_coker(const Partition& L, const Partition& Z, const Partition& M0, const Partition& M1) {
  const int r = L.weight() - M0.weight();
  if (r < 0 || r != Z.weight() - M1.weight()) return Scalar();
  Scalar c;
  for (const auto& i : partitions_of(r)) {
    Scalar g = hall::hall_number(L, i, M0);
    if (g.is_zero()) continue;
    c += g * hall::hall_number(Z, M1, i) * cached_aut(i);
  }
  return c;
}

DerivedElem sector_product(const DerivedElem& x, const DerivedElem& y) {
  Terms out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) out.add_scaled(sector_basis_product(a, b), ca * cb);
  // Both operands are pure; check terms even when the other side is zero.
  for (const auto& [a, ca] : x.terms) (void)sector_of(a);
  for (const auto& [b, cb] : y.terms) (void)sector_of(b);
  return {std::move(out), DerivedBasis::Natural};
}

DerivedElem straighten(const DerivedElem& x) {
  if (x.basis == DerivedBasis::Normal) return x;
  Terms out;
  for (const auto& [o, c] : x.terms) out.add_scaled(straighten_basis(o), c);
  return {std::move(out), DerivedBasis::Normal};
}

DerivedElem to_natural(const DerivedElem& x) {
  if (x.basis == DerivedBasis::Natural) return x;
  Terms out;
  for (const auto& [o, c] : x.terms) out.add_scaled(mixed_expansion(o.h0, o.h1), c);
  return {std::move(out), DerivedBasis::Natural};
}

DerivedElem to_basis(const DerivedElem& x, DerivedBasis basis) {
  return basis == DerivedBasis::Normal ? straighten(x) : to_natural(x);
}

DerivedElem derived_product(const DerivedElem& x, const DerivedElem& y, DerivedBasis out) {
  const DerivedElem xn = straighten(x);
  const DerivedElem yn = straighten(y);
  Terms res;
  for (const auto& [a, ca] : xn.terms)
    for (const auto& [b, cb] : yn.terms) res.add_scaled(normal_basis_product(a, b), ca * cb);
  return to_basis({std::move(res), DerivedBasis::Normal}, out);
}

DerivedElem psi_plus(const HallElem& x) { return {from_hall(x, false), DerivedBasis::Natural}; }

DerivedElem psi_minus(const HallElem& x) { return {from_hall(x, true), DerivedBasis::Natural}; }

RelationSides dd_relation_sides(const Partition& lambda, const Partition& mu) {
  const TensorHallElem dx = hall::coproduct(hall::basis(lambda));
  const TensorHallElem dy = hall::coproduct(hall::basis(mu));
  RelationSides sides{zero(), zero()};
  for (const auto& [xs, cx] : dx)
    for (const auto& [ys, cy] : dy) {
      const auto& [x1, x2] = xs;
      const auto& [y1, y2] = ys;
      const Scalar left = hall::hopf_pairing(hall::basis(x2), hall::basis(y1));
      if (!left.is_zero()) {
        DerivedElem p = derived_product(psi_plus(hall::basis(x1)), psi_minus(hall::basis(y2)));
        sides.lhs.terms.add_scaled(p.terms, cx * cy * left);
      }
      const Scalar right = hall::hopf_pairing(hall::basis(x1), hall::basis(y2));
      if (!right.is_zero()) {
        DerivedElem p = derived_product(psi_minus(hall::basis(y1)), psi_plus(hall::basis(x2)));
        sides.rhs.terms.add_scaled(p.terms, cx * cy * right);
      }
    }
  return sides;
}

bool dd_relation_check(const Partition& lambda, const Partition& mu) { return dd_relation_sides(lambda, mu).holds(); }

bool tensor_factorization_check(const Partition& a, const Partition& b, const Partition& c, const Partition& d) {
  const DerivedElem ua = natural(a, {});
  const DerivedElem ub = natural({}, b);
  const DerivedElem uc = natural(c, {});
  const DerivedElem ud = natural({}, d);
  const DerivedElem lhs = derived_product(derived_product(ua, ub), derived_product(uc, ud));
  const DerivedElem rhs = derived_product(derived_product(ua, uc), derived_product(ub, ud));
  return lhs == rhs;
}

std::vector<RootObject> root_objects_up_to(int n) {
  std::vector<RootObject> out;
  for (int w = 0; w <= n; ++w)
    for (int k = w; k >= 0; --k)
      for (const auto& a : partitions_of(k))
        for (const auto& b : partitions_of(w - k)) out.push_back({a, b});
  return out;
}

}  // namespace jhall::derived
