#include <gtest/gtest.h>

#include "jhall/derived.hpp"
#include "jhall/qcombinatorics.hpp"
#include "jhall/symfunc.hpp"
#include "support.hpp"

using namespace jhall;
using jhall::testing::q;
using jhall::testing::v;

namespace {

const SymRing& ring() {
  static const SymRing r;
  return r;
}

SymFunc el(SymBasis b, const Partition& lambda, const Scalar& c = Scalar(1)) {
  SymFunc f = ring().basis_element(b, lambda);
  f.terms *= c;
  return f;
}

SymFunc in_m(const SymFunc& f) { return ring().convert(f, SymBasis::Monomial); }

TensorSymFunc tensor_term(SymBasis b, const Partition& l, const Partition& r, const Scalar& c) {
  TensorSymFunc t;
  t.basis = b;
  t.terms.add({l, r}, c);
  return t;
}

}  // namespace

TEST(SymConvert, Examples) {
  EXPECT_EQ(ring().convert(el(SymBasis::Power, {1}), SymBasis::Monomial), el(SymBasis::Monomial, {1}));
  EXPECT_EQ(ring().convert(el(SymBasis::Power, {2}), SymBasis::Monomial), el(SymBasis::Monomial, {2}));
  EXPECT_EQ(ring().convert(el(SymBasis::Elementary, {2}), SymBasis::Monomial), el(SymBasis::Monomial, {1, 1}));
  SymFunc p11 = el(SymBasis::Monomial, {2});
  p11.terms.add({1, 1}, Scalar(2));
  EXPECT_EQ(ring().convert(el(SymBasis::Power, {1, 1}), SymBasis::Monomial), p11);
}

TEST(SymConvert, RoundTripsUpToDegreeSix) {
  const SymBasis all[] = {SymBasis::Monomial, SymBasis::Elementary, SymBasis::Power, SymBasis::HallLittlewood};
  for (const auto& lambda : partitions_up_to(6))
    for (SymBasis a : all)
      for (SymBasis b : all) {
        const SymFunc f = el(a, lambda, q() + 2);
        ASSERT_EQ(ring().convert(ring().convert(f, b), a), f) << lambda << " " << basis_letter(a) << basis_letter(b);
      }
}

TEST(SymMultiply, Examples) {
  EXPECT_EQ(ring().multiply(el(SymBasis::Power, {1}), el(SymBasis::Power, {1})), el(SymBasis::Power, {1, 1}));
  SymFunc e11 = el(SymBasis::Monomial, {2});
  e11.terms.add({1, 1}, Scalar(2));
  EXPECT_EQ(in_m(ring().multiply(el(SymBasis::Elementary, {1}), el(SymBasis::Elementary, {1}))), e11);
  const SymFunc f = el(SymBasis::HallLittlewood, {2, 1}, q());
  EXPECT_EQ(ring().multiply(f, ring().one(SymBasis::HallLittlewood)), f);
  EXPECT_EQ(ring().multiply(el(SymBasis::Elementary, {2}), el(SymBasis::Elementary, {1})).basis, SymBasis::Elementary);
}

TEST(SymMultiply, CommutativeAcrossBases) {
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const SymFunc x = el(SymBasis::HallLittlewood, a), y = el(SymBasis::Power, b);
      ASSERT_EQ(in_m(ring().multiply(x, y)), in_m(ring().multiply(y, x)));
    }
}

TEST(HallLittlewood, SmallCases) {
  EXPECT_EQ(ring().hl_P({1}), el(SymBasis::Monomial, {1}));
  // coefficients of hl_P_in_t use the Scalar indeterminate for t
  LinComb<Partition> p2(Partition{2});
  p2.add({1, 1}, Scalar(1) - v());
  EXPECT_EQ(ring().hl_P_in_t({2}), p2);
  SymFunc want = el(SymBasis::Monomial, {2});
  want.terms.add({1, 1}, Scalar(1) - q().inverse());
  EXPECT_EQ(ring().hl_P({2}), want);
}

TEST(HallLittlewood, ColumnsAreElementary) {
  for (int r = 1; r <= 6; ++r)
    EXPECT_EQ(ring().hl_P(Partition::column(r)), in_m(el(SymBasis::Elementary, {r})));
}

TEST(HallLittlewood, UnitriangularAndOrthogonal) {
  for (int n = 0; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      const auto& row = ring().hl_P_in_t(lambda);
      EXPECT_EQ(row.coefficient(lambda), Scalar(1));
      for (const auto& [mu, c] : row) EXPECT_TRUE(dominance_leq(mu, lambda));
      for (const auto& mu : parts)
        if (mu != lambda) EXPECT_TRUE(ring().hl_scalar_product_in_t(row, ring().hl_P_in_t(mu)).is_zero());
    }
  }
}

TEST(HallLittlewood, IndependentOfDominanceExtension) {
  const SymRing other(SymRing::kDefaultDegreeBound, DominanceExtension::ConjugateColex);
  for (const auto& lambda : partitions_up_to(5)) EXPECT_EQ(other.hl_P(lambda), ring().hl_P(lambda)) << lambda;
}

TEST(PowerSumPairing, Examples) {
  EXPECT_EQ(ring().power_sum_pairing(el(SymBasis::Power, {1}), el(SymBasis::Power, {1})), Scalar(1) / (q() - 1));
  EXPECT_EQ(ring().power_sum_pairing(el(SymBasis::Power, {2}), el(SymBasis::Power, {1})), Scalar());
  EXPECT_EQ(ring().power_sum_pairing(el(SymBasis::Elementary, {1}), el(SymBasis::Elementary, {1})),
            Scalar(1) / (q() - 1));
  for (int r = 1; r <= 4; ++r)
    EXPECT_EQ(ring().power_sum_pairing(el(SymBasis::Power, {r}), el(SymBasis::Power, {r})),
              Scalar(r) / (Scalar::q_power(r) - 1));
}

TEST(PowerSumPairing, TransportsHopfPairing) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        ASSERT_EQ(ring().power_sum_pairing(ring().psi(hall::basis(a)), ring().psi(hall::basis(b))),
                  hall::hopf_pairing(hall::basis(a), hall::basis(b)));
}

TEST(Psi, Examples) {
  EXPECT_EQ(ring().convert(ring().psi(hall::basis({1})), SymBasis::Elementary),
            el(SymBasis::Elementary, {1}, q() - 1));
  EXPECT_EQ(ring().convert(ring().psi(hall::basis({1, 1})), SymBasis::Elementary),
            el(SymBasis::Elementary, {2}, (q() * q() - 1) * (q() * q() - q()) / q()));
  EXPECT_EQ(ring().convert(ring().psi(hall::product(hall::basis({1}), hall::basis({1}))), SymBasis::Power),
            el(SymBasis::Power, {1, 1}, (q() - 1) * (q() - 1)));
  EXPECT_EQ(psi_scale({2}), q() * q() - q());
}

TEST(Psi, ColumnsMapToElementary) {
  for (int r = 1; r <= 5; ++r) {
    const Partition col = Partition::column(r);
    EXPECT_EQ(ring().convert(ring().psi(hall::basis(col)), SymBasis::Elementary),
              el(SymBasis::Elementary, {r}, aut_order(col) * Scalar::q_power(-r * (r - 1) / 2)));
  }
}

TEST(Psi, HomomorphismAndInverse) {
  const auto parts = partitions_up_to(4);
  for (const auto& a : parts) {
    ASSERT_EQ(ring().psi_inv(ring().psi(hall::basis(a))), hall::basis(a));
    ASSERT_EQ(ring().psi(ring().psi_inv(el(SymBasis::Power, a))), ring().convert(el(SymBasis::Power, a), SymBasis::HallLittlewood));
    for (const auto& b : parts)
      ASSERT_EQ(in_m(ring().psi(hall::product(hall::basis(a), hall::basis(b)))),
                in_m(ring().multiply(ring().psi(hall::basis(a)), ring().psi(hall::basis(b)))))
          << a << " " << b;
  }
}

TEST(Theta, Examples) {
  const SymRing& R = ring();
  EXPECT_EQ(R.convert(R.theta(derived::natural({1}, {})), SymBasis::Elementary),
            tensor_term(SymBasis::Elementary, {1}, {}, q() - 1));
  EXPECT_EQ(R.convert(R.theta(derived::natural({}, {1})), SymBasis::Elementary),
            tensor_term(SymBasis::Elementary, {}, {1}, q() - 1));
  TensorSymFunc mixed = tensor_term(SymBasis::Elementary, {1}, {1}, (q() - 1) * (q() - 1));
  mixed.terms.add({{}, {}}, -(q() - 1));
  EXPECT_EQ(R.convert(R.theta(derived::natural({1}, {1})), SymBasis::Elementary), mixed);
}

TEST(Theta, ColumnsMapToElementaryLegs) {
  for (int r = 1; r <= 4; ++r) {
    const Partition col = Partition::column(r);
    const Scalar c = aut_order(col) * Scalar::q_power(-r * (r - 1) / 2);
    EXPECT_EQ(ring().convert(ring().theta(derived::natural(col, {})), SymBasis::Elementary),
              tensor_term(SymBasis::Elementary, {r}, {}, c));
    EXPECT_EQ(ring().convert(ring().theta(derived::natural({}, col)), SymBasis::Elementary),
              tensor_term(SymBasis::Elementary, {}, {r}, c));
  }
}

TEST(Theta, IsHomomorphism) {
  const auto objs = derived::root_objects_up_to(2);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      const DerivedElem x = derived::natural(a.h0, a.h1), y = derived::natural(b.h0, b.h1);
      ASSERT_EQ(ring().convert(ring().theta(derived::derived_product(x, y)), SymBasis::Monomial),
                ring().convert(ring().multiply(ring().theta(x), ring().theta(y)), SymBasis::Monomial))
          << a.to_string() << " " << b.to_string();
    }
}

TEST(Torsion, Examples) {
  HallElem t11;
  t11.add({1}, Scalar(1) / (q() - 1));
  EXPECT_EQ(ring().torsion_T(1, 1), t11);
  EXPECT_TRUE(ring().torsion_T(1, 2).empty());
  EXPECT_EQ(ring().convert(ring().psi(ring().torsion_T(2, 1)), SymBasis::Power),
            el(SymBasis::Power, {2}, v_integer(2) / 2));
  // one point of degree 2: psi^{-1}(p_1) with q -> q^2
  HallElem t22;
  t22.add({1}, v_integer(2) / (q() * q() - 1));
  EXPECT_EQ(ring().torsion_T(2, 2), t22);
}

TEST(Torsion, ZeroExactlyWhenDegreeDoesNotDivide) {
  for (int r = 1; r <= 6; ++r)
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(ring().torsion_T(r, d).empty(), r % d != 0) << r << " " << d;
}

TEST(Torsion, GeneratorsCommute) {
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s) {
      const HallElem a = ring().torsion_T(r, 1), b = ring().torsion_T(s, 1);
      ASSERT_EQ(hall::product(a, b), hall::product(b, a));
    }
}

TEST(DegreeBound, Enforced) {
  const SymRing small(3);
  EXPECT_THROW((void)small.hl_P({2, 2}), DegreeBoundExceeded);
  EXPECT_THROW((void)small.multiply(small.basis_element(SymBasis::Power, {2}), small.basis_element(SymBasis::Power, {2})),
               DegreeBoundExceeded);
  try {
    (void)small.psi(hall::basis({4}));
    FAIL();
  } catch (const DegreeBoundExceeded& e) {
    EXPECT_EQ(e.degree(), 4);
    EXPECT_EQ(e.bound(), 3);
  }
}
