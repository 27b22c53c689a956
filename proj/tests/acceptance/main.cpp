// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cli/checks.hpp"
#include "jhall/derived.hpp"
#include "jhall/hall.hpp"
#include "jhall/oracle.hpp"
#include "jhall/qcombinatorics.hpp"
#include "jhall/symfunc.hpp"

using namespace jhall;

namespace {

constexpr double kTimeLimitSeconds = 120.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome from_reports(const std::vector<cli::CheckReport>& reports) {
  Outcome o;
  long cases = 0, skipped = 0;
  for (const auto& r : reports) {
    cases += r.cases;
    skipped += r.skipped;
    if (!r.passed()) o.fail(r.suite + ": " + r.failures.front());
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases" + (skipped ? ", " + std::to_string(skipped) + " over budget" : "");
  return o;
}

cli::CheckReport suite(const std::string& name, int bound, int p = 2, int trials = 1000) {
  cli::CheckOptions o;
  o.bound = bound;
  o.p = p;
  o.trials = trials;
  return cli::run_check(name, o);
}

mpq_class at(const Scalar& s, int p) { return *s.evaluate_q(p); }

Outcome oracle_firewall() {
  Outcome o;
  long cases = 0;
  for (const auto& [p, bound] : {std::pair{2, 5}, std::pair{3, 4}})
    for (const auto& l : partitions_up_to(bound))
      for (int k = 0; k <= l.weight(); ++k)
        for (const auto& m : partitions_of(l.weight() - k))
          for (const auto& n : partitions_of(k)) {
            ++cases;
            if (at(hall::hall_number(l, m, n), p) != oracle::count_submodules(l, m, n, p))
              o.fail("G^(" + l.to_string() + ")_(" + m.to_string() + ")(" + n.to_string() + ") at q=" +
                     std::to_string(p));
          }
  for (int p : {2, 3}) {
    // |End| = p^{hom_dim}; 3^16 for (1^4) at p = 3 is above the default budget
    const std::uint64_t budget = p == 2 ? std::uint64_t{1} << 16 : std::uint64_t{43046721};
    for (const auto& l : partitions_up_to(4)) {
      ++cases;
      if (at(aut_order(l), p) != oracle::aut_count(l, p, budget))
        o.fail("|Aut(" + l.to_string() + ")| at q=" + std::to_string(p));
      for (const auto& m : partitions_up_to(4)) {
        ++cases;
        if (hom_dim(l, m) != oracle::hom_dim_oracle(l, m, p))
          o.fail("dim Hom(" + l.to_string() + ", " + m.to_string() + ") at p=" + std::to_string(p));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome psi_theorem() {
  return from_reports({suite("psi", 5), suite("pairing", 4)});
}

Outcome theta_images() {
  Outcome o;
  const SymRing ring;
  long cases = 0;
  for (int r = 1; r <= 4; ++r) {
    const Partition col = Partition::column(r);
    const Scalar c = aut_order(col) * Scalar::q_power(-r * (r - 1) / 2);
    for (bool shifted : {false, true}) {
      ++cases;
      TensorSymFunc want;
      want.basis = SymBasis::Elementary;
      want.terms.add(shifted ? PartitionPair{{}, {r}} : PartitionPair{{r}, {}}, c);
      const DerivedElem x = shifted ? derived::natural({}, col) : derived::natural(col, {});
      if (ring.convert(ring.theta(x), SymBasis::Elementary) != want)
        o.fail("theta(u[" + (shifted ? ";" + col.to_string() : col.to_string() + ";") + "])");
    }
  }
  const auto objs = derived::root_objects_up_to(4);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      ++cases;
      const DerivedElem x = derived::natural(a.h0, a.h1), y = derived::natural(b.h0, b.h1);
      if (ring.convert(ring.theta(derived::derived_product(x, y)), SymBasis::Monomial) !=
          ring.convert(ring.multiply(ring.theta(x), ring.theta(y)), SymBasis::Monomial))
        o.fail("theta(u[" + a.to_string() + "] * u[" + b.to_string() + "])");
    }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome hall_littlewood() {
  Outcome o;
  const SymRing ring;
  const SymRing other(SymRing::kDefaultDegreeBound, DominanceExtension::ConjugateColex);
  for (int n = 0; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& l : parts) {
      const auto& row = ring.hl_P_in_t(l);
      if (row.coefficient(l) != Scalar(1)) o.fail("P_(" + l.to_string() + ") is not monic");
      for (const auto& [mu, c] : row)
        if (!dominance_leq(mu, l)) o.fail("P_(" + l.to_string() + ") has m_(" + mu.to_string() + ")");
      for (const auto& mu : parts)
        if (mu < l && !ring.hl_scalar_product_in_t(row, ring.hl_P_in_t(mu)).is_zero())
          o.fail("<P_(" + l.to_string() + "), P_(" + mu.to_string() + ")> != 0");
      if (n <= 5 && other.hl_P(l) != ring.hl_P(l)) o.fail("P_(" + l.to_string() + ") depends on the extension");
    }
    if (n >= 1 && ring.hl_P(Partition::column(n)) != ring.convert(ring.basis_element(SymBasis::Elementary, {n}),
                                                                   SymBasis::Monomial))
      o.fail("P_(1^" + std::to_string(n) + ") != e_" + std::to_string(n));
  }
  LinComb<Partition> p2(Partition{2});
  p2.add({1, 1}, Scalar(1) - Scalar::v());  // indeterminate stands for t here
  if (ring.hl_P_in_t({2}) != p2) o.fail("P_(2) != m_2 + (1-t) m_11");
  if (o.ok) o.detail = "degree <= 6";
  return o;
}

Outcome appendix() {
  Outcome o;
  std::string detail;
  for (int p : {2, 3}) {
    const auto rep = oracle::appendix_random_check(p, oracle::kMaxAppendixDimension, 1000, 2024 + p);
    if (!rep.ok())
      o.fail("p=" + std::to_string(p) + ": " + std::to_string(rep.failures) + " failures in " +
             std::to_string(rep.accepted) + " accepted samples");
    detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " +
              std::to_string(rep.accepted) + " samples over " + std::to_string(rep.configurations) + " dims";
  }
  if (o.ok) o.detail = detail;
  return o;
}

bool conserved(const DerivedElem& x, int k0) {
  for (const auto& [obj, c] : x.terms)
    if (obj.k0_class() != k0) return false;
  return true;
}

Outcome k0_conservation() {
  Outcome o;
  long products = 0;
  const auto nat = [](const RootObject& a) { return derived::natural(a.h0, a.h1); };
  const auto small = derived::root_objects_up_to(2);
  for (const auto& a : small)
    for (const auto& b : small) {
      const DerivedElem ab = derived::derived_product(nat(a), nat(b));
      for (const auto& c : small) {
        products += 2;
        const int k0 = a.k0_class() + b.k0_class() + c.k0_class();
        if (!conserved(derived::derived_product(ab, nat(c)), k0) ||
            !conserved(derived::derived_product(nat(a), derived::derived_product(nat(b), nat(c))), k0))
          o.fail("triple " + a.to_string() + " " + b.to_string() + " " + c.to_string());
      }
    }
  for (const auto& a : derived::root_objects_up_to(3))
    for (const auto& b : derived::root_objects_up_to(3)) {
      ++products;
      if (!conserved(derived::derived_product(nat(a), nat(b)), a.k0_class() + b.k0_class()))
        o.fail("pair " + a.to_string() + " " + b.to_string());
    }
  for (const auto& l : partitions_up_to(4))
    for (const auto& m : partitions_up_to(4)) {
      products += 2;
      const auto sides = derived::dd_relation_sides(l, m);
      const int k0 = l.weight() - m.weight();
      if (!conserved(sides.lhs, k0) || !conserved(sides.rhs, k0))
        o.fail("double relation (" + l.to_string() + "), (" + m.to_string() + ")");
    }
  if (o.ok) o.detail = std::to_string(products) + " products";
  return o;
}

Outcome torsion() {
  Outcome o;
  const SymRing ring;
  for (int r = 1; r <= 6; ++r)
    for (int d = 1; d <= 6; ++d)
      if (ring.torsion_T(r, d).empty() != (r % d != 0))
        o.fail("T(" + std::to_string(r) + "," + std::to_string(d) + ")");
  HallElem t11;
  t11.add({1}, Scalar(1) / (Scalar::q() - 1));
  if (ring.torsion_T(1, 1) != t11) o.fail("T(1,1) != u[1]/(q-1)");
  if (o.ok) o.detail = "r, d <= 6";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle firewall", oracle_firewall},
      {"associativity", [] { return from_reports({suite("associativity", 2)}); }},
      {"commutativity", [] { return from_reports({suite("commutativity", 3)}); }},
      {"double relation", [] { return from_reports({suite("dd", 4)}); }},
      {"morphism strata", [] { return from_reports({suite("oracle-morphisms", 4, 2), suite("oracle-morphisms", 4, 3)}); }},
      {"straightening round trip", [] { return from_reports({suite("straighten", 6)}); }},
      {"psi images, homomorphism, pairing", psi_theorem},
      {"theta images and homomorphism", theta_images},
      {"Hall-Littlewood", hall_littlewood},
      {"rank identity samples", appendix},
      {"K0 conservation", k0_conservation},
      {"torsion generators", torsion},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kTimeLimitSeconds) o.fail("took " + std::to_string(secs) + " s");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail << ", "
              << static_cast<int>(secs * 1000) / 1000.0 << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
