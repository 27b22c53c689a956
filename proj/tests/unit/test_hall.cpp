#include <gtest/gtest.h>

#include "jhall/hall.hpp"
#include "jhall/oracle.hpp"
#include "jhall/qcombinatorics.hpp"
#include "support.hpp"

using namespace jhall;
using jhall::testing::q;

namespace {

HallElem u(const Partition& p) { return hall::basis(p); }

}  // namespace

TEST(Pieri, Coefficients) {
  EXPECT_EQ(hall::pieri_coeff({1, 1}, {1}, 1), q() + 1);
  EXPECT_EQ(hall::pieri_coeff({2}, {1}, 1), Scalar(1));
  EXPECT_EQ(hall::pieri_coeff({2, 1}, {1, 1}, 1), Scalar(1));
  EXPECT_EQ(hall::pieri_coeff({2}, {}, 2), Scalar());
}

TEST(Pieri, ElementaryProducts) {
  HallElem e2 = u({2});
  e2.add({1, 1}, q() + 1);
  EXPECT_EQ(hall::elementary_product({2}), e2);
  EXPECT_EQ(hall::elementary_product({1, 1}), u({1, 1}));
  EXPECT_EQ(hall::elementary_product({}), hall::unit());
}

TEST(Pieri, ElementaryProductsAreUnitriangular) {
  for (const auto& nu : partitions_up_to(6)) {
    const HallElem e = hall::elementary_product(nu);
    EXPECT_EQ(e.coefficient(nu), Scalar(1));
    for (const auto& [lambda, c] : e) EXPECT_TRUE(dominance_leq(lambda, nu)) << lambda << " in E_" << nu;
  }
}

TEST(HallNumbers, SmallValues) {
  EXPECT_EQ(hall::hall_number({2}, {1}, {1}), Scalar(1));
  EXPECT_EQ(hall::hall_number({1, 1}, {1}, {1}), q() + 1);
  for (const auto& l : partitions_up_to(4))
    for (const auto& m : partitions_up_to(4))
      EXPECT_EQ(hall::hall_number(l, m, {}), Scalar(l == m ? 1 : 0));
  EXPECT_EQ(hall::hall_number({2}, {1}, {2}), Scalar());
}

TEST(HallNumbers, SymmetricPolynomialsWithIntegerCoefficients) {
  for (const auto& l : partitions_up_to(6))
    for (int k = 0; k <= l.weight(); ++k)
      for (const auto& m : partitions_of(l.weight() - k))
        for (const auto& n : partitions_of(k)) {
          const Scalar g = hall::hall_number(l, m, n);
          ASSERT_EQ(g, hall::hall_number(l, n, m));
          ASSERT_TRUE(g.is_polynomial());
          ASSERT_TRUE(g.denominator() == IntPoly(1));
          ASSERT_TRUE(g.is_even());
        }
}

TEST(HallNumbers, IndependentOfDominanceExtension) {
  for (const auto& l : partitions_up_to(6))
    for (int k = 0; k <= l.weight(); ++k)
      for (const auto& m : partitions_of(l.weight() - k))
        for (const auto& n : partitions_of(k))
          ASSERT_EQ(hall::hall_number(l, m, n, DominanceExtension::ReverseLex),
                    hall::hall_number(l, m, n, DominanceExtension::ConjugateColex));
}

TEST(HallNumbers, AgreeWithSubmoduleCountsOverF2) {
  for (const auto& l : partitions_up_to(4))
    for (int k = 0; k <= l.weight(); ++k)
      for (const auto& m : partitions_of(l.weight() - k))
        for (const auto& n : partitions_of(k))
          ASSERT_EQ(*hall::hall_number(l, m, n).evaluate_q(2), oracle::count_submodules(l, m, n, 2))
              << l << " " << m << " " << n;
}

TEST(HallProduct, Examples) {
  HallElem want;
  want.add({2}, (q() - 1) / q());
  want.add({1, 1}, Scalar(1) / q());
  EXPECT_EQ(hall::product(u({1}), u({1})), want);
  EXPECT_EQ(hall::product(hall::unit(), u({2, 1})), u({2, 1}));
  for (const auto& [l, c] : hall::product(u({1}), u({2}))) EXPECT_EQ(l.weight(), 3);
}

TEST(HallProduct, AssociativeAndCommutative) {
  const auto parts = partitions_up_to(3);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      if (a.weight() + b.weight() > 6) continue;
      ASSERT_EQ(hall::product(u(a), u(b)), hall::product(u(b), u(a)));
      for (const auto& c : parts) {
        if (a.weight() + b.weight() + c.weight() > 6) continue;
        ASSERT_EQ(hall::product(hall::product(u(a), u(b)), u(c)), hall::product(u(a), hall::product(u(b), u(c))));
      }
    }
}

TEST(Coproduct, Examples) {
  EXPECT_EQ(hall::coproduct(u({1})), hall::tensor(u({1}), hall::unit()) + hall::tensor(hall::unit(), u({1})));
  EXPECT_EQ(hall::coproduct(u({2})), hall::tensor(u({2}), hall::unit()) + hall::tensor(u({1}), u({1})) +
                                         hall::tensor(hall::unit(), u({2})));
  TensorHallElem d11 = hall::tensor(u({1, 1}), hall::unit()) + hall::tensor(hall::unit(), u({1, 1}));
  d11.add({{1}, {1}}, q() + 1);
  EXPECT_EQ(hall::coproduct(u({1, 1})), d11);
  EXPECT_EQ(hall::counit(u({})), Scalar(1));
  EXPECT_EQ(hall::counit(u({1})), Scalar());
}

TEST(Coproduct, IsMultiplicative) {
  for (const auto& a : partitions_up_to(4))
    for (const auto& b : partitions_up_to(4)) {
      if (a.weight() + b.weight() > 6) continue;
      ASSERT_EQ(hall::coproduct(hall::product(u(a), u(b))),
                hall::tensor_product(hall::coproduct(u(a)), hall::coproduct(u(b))))
          << a << " " << b;
    }
}

TEST(HopfPairing, Examples) {
  EXPECT_EQ(hall::hopf_pairing(u({1}), u({1})), q() - 1);
  EXPECT_EQ(hall::hopf_pairing(u({1}), u({2})), Scalar());
  EXPECT_EQ(hall::hopf_pairing(hall::product(u({1}), u({1})), u({2})), (q() - 1) * (q() - 1));
}

TEST(HopfPairing, CompatibleWithCoproduct) {
  for (const auto& a : partitions_up_to(4))
    for (const auto& b : partitions_up_to(4))
      for (const auto& c : partitions_up_to(4)) {
        if (a.weight() + b.weight() != c.weight()) continue;
        ASSERT_EQ(hall::hopf_pairing(hall::product(u(a), u(b)), u(c)),
                  hall::hopf_pairing(hall::tensor(u(a), u(b)), hall::coproduct(u(c))));
      }
}
