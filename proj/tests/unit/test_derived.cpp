#include <gtest/gtest.h>

#include "jhall/derived.hpp"
#include "jhall/oracle.hpp"
#include "support.hpp"

using namespace jhall;
using jhall::testing::q;

namespace {

DerivedElem nat(const Partition& a, const Partition& b) { return derived::natural(a, b); }

DerivedElem combo(std::initializer_list<std::pair<RootObject, Scalar>> terms,
                  DerivedBasis basis = DerivedBasis::Natural) {
  DerivedElem x = derived::zero(basis);
  for (const auto& [o, c] : terms) x.terms.add(o, c);
  return x;
}

bool conserves_k0(const DerivedElem& x, int k0) {
  for (const auto& [o, c] : x.terms)
    if (o.k0_class() != k0) return false;
  return true;
}

}  // namespace

TEST(RootObject, ClassesAndPrinting) {
  const RootObject o{{2, 1}, {1}};
  EXPECT_EQ(o.k0_class(), 2);
  EXPECT_EQ(o.total_weight(), 4);
  EXPECT_EQ(o.to_string(), "2,1;1");
  EXPECT_EQ(RootObject{}.to_string(), ";");
}

TEST(KernelCokernelCounts, Examples) {
  EXPECT_EQ(derived::count_maps_by_ker_coker({1}, {1}, {}, {}), q() - 1);
  EXPECT_EQ(derived::count_maps_by_ker_coker({1}, {1}, {1}, {1}), Scalar(1));
  EXPECT_EQ(derived::count_maps_by_ker_coker({2}, {1}, {1}, {}), q() - 1);
  EXPECT_EQ(derived::count_maps_by_ker_coker({2}, {1}, {1}, {1}), Scalar());
}

TEST(KernelCokernelCounts, AgreeWithMorphismClassification) {
  for (int p : {2, 3})
    for (const auto& l : partitions_up_to(3))
      for (const auto& z : partitions_up_to(3)) {
        const auto h = oracle::classify_morphisms(l, z, p);
        for (const auto& [k, count] : h)
          ASSERT_EQ(*derived::count_maps_by_ker_coker(l, z, k.first, k.second).evaluate_q(p), count);
      }
}

TEST(SectorProduct, Examples) {
  const DerivedElem mixed = combo({{{{1}, {1}}, Scalar(1)}, {{}, q() - 1}});
  EXPECT_EQ(derived::sector_product(nat({1}, {}), nat({}, {1})), mixed);
  EXPECT_EQ(derived::sector_product(nat({}, {1}), nat({1}, {})), mixed);
  EXPECT_EQ(derived::sector_product(nat({1}, {}), nat({1}, {})),
            combo({{{{2}, {}}, (q() - 1) / q()}, {{{1, 1}, {}}, Scalar(1) / q()}}));
  EXPECT_THROW(derived::sector_product(nat({1}, {1}), nat({1}, {})), std::invalid_argument);
}

TEST(SectorProduct, MixedOrdersAgree) {
  for (const auto& a : partitions_up_to(4))
    for (const auto& b : partitions_up_to(4))
      ASSERT_EQ(derived::sector_product(nat(a, {}), nat({}, b)), derived::sector_product(nat({}, b), nat(a, {})));
}

TEST(Straighten, Examples) {
  EXPECT_EQ(derived::straighten(nat({1}, {1})),
            combo({{{{1}, {1}}, Scalar(1)}, {{}, -(q() - 1)}}, DerivedBasis::Normal));
  EXPECT_EQ(derived::straighten(nat({2, 1}, {})), derived::normal({2, 1}, {}));
  EXPECT_EQ(derived::to_natural(derived::normal({1}, {1})), combo({{{{1}, {1}}, Scalar(1)}, {{}, q() - 1}}));
  EXPECT_EQ(derived::to_natural(derived::normal({3}, {})), nat({3}, {}));
  EXPECT_EQ(derived::to_natural(derived::normal({2}, {1})), combo({{{{2}, {1}}, Scalar(1)}, {{{1}, {}}, q() - 1}}));
}

TEST(Straighten, RoundTripsUpToWeightSix) {
  for (const auto& o : derived::root_objects_up_to(6)) {
    ASSERT_EQ(derived::to_natural(derived::straighten(nat(o.h0, o.h1))), nat(o.h0, o.h1)) << o.to_string();
    ASSERT_EQ(derived::straighten(derived::to_natural(derived::normal(o.h0, o.h1))), derived::normal(o.h0, o.h1));
  }
}

TEST(DerivedProduct, UnitAndSectors) {
  const DerivedElem one = nat({}, {});
  EXPECT_EQ(derived::derived_product(one, nat({1}, {1})), nat({1}, {1}));
  EXPECT_EQ(derived::derived_product(nat({1}, {1}), one), nat({1}, {1}));
  for (const auto& a : derived::root_objects_up_to(3))
    for (const auto& b : derived::root_objects_up_to(3)) {
      if (!(a.h0.empty() || a.h1.empty()) || !(b.h0.empty() || b.h1.empty())) continue;
      ASSERT_EQ(derived::derived_product(nat(a.h0, a.h1), nat(b.h0, b.h1)),
                derived::sector_product(nat(a.h0, a.h1), nat(b.h0, b.h1)));
    }
}

TEST(DerivedProduct, OutputBasisFlag) {
  const DerivedElem x = derived::derived_product(nat({1}, {}), nat({}, {1}), DerivedBasis::Normal);
  EXPECT_EQ(x, derived::normal({1}, {1}));
}

TEST(DerivedProduct, CommutativeAndConservesK0) {
  const auto objs = derived::root_objects_up_to(3);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      const DerivedElem ab = derived::derived_product(nat(a.h0, a.h1), nat(b.h0, b.h1));
      ASSERT_EQ(ab, derived::derived_product(nat(b.h0, b.h1), nat(a.h0, a.h1)));
      ASSERT_TRUE(conserves_k0(ab, a.k0_class() + b.k0_class()));
    }
}

TEST(DerivedProduct, AssociativeOnSmallTriples) {
  const auto objs = derived::root_objects_up_to(2);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs) {
        const DerivedElem x = nat(a.h0, a.h1), y = nat(b.h0, b.h1), z = nat(c.h0, c.h1);
        ASSERT_EQ(derived::derived_product(derived::derived_product(x, y), z),
                  derived::derived_product(x, derived::derived_product(y, z)));
      }
}

TEST(Embeddings, AreHomomorphisms) {
  const HallElem u1 = hall::basis({1});
  EXPECT_EQ(derived::psi_plus(u1), nat({1}, {}));
  EXPECT_EQ(derived::psi_minus(u1), nat({}, {1}));
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const HallElem ab = hall::product(hall::basis(a), hall::basis(b));
      ASSERT_EQ(derived::psi_plus(ab),
                derived::derived_product(derived::psi_plus(hall::basis(a)), derived::psi_plus(hall::basis(b))));
      ASSERT_EQ(derived::psi_minus(ab),
                derived::derived_product(derived::psi_minus(hall::basis(a)), derived::psi_minus(hall::basis(b))));
    }
}

TEST(DoubleRelation, Examples) {
  const auto sides = derived::dd_relation_sides({1}, {1});
  EXPECT_TRUE(sides.holds());
  EXPECT_EQ(sides.lhs, derived::to_natural(combo({{{{1}, {1}}, Scalar(1)}, {{}, q() - 1}}, DerivedBasis::Normal)));
  EXPECT_TRUE(derived::dd_relation_check({1}, {}));
  EXPECT_TRUE(derived::dd_relation_check({2}, {1, 1}));
}

TEST(DoubleRelation, HoldsUpToWeightThree) {
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) ASSERT_TRUE(derived::dd_relation_check(a, b)) << a << " " << b;
}

TEST(TensorFactorization, Examples) {
  EXPECT_TRUE(derived::tensor_factorization_check({1}, {}, {1}, {}));
  EXPECT_TRUE(derived::tensor_factorization_check({1}, {1}, {1}, {}));
  EXPECT_TRUE(derived::tensor_factorization_check({2}, {1}, {1}, {1}));
}
