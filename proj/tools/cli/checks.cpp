#include "checks.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jhall/derived.hpp"
#include "jhall/hall.hpp"
#include "jhall/oracle.hpp"
#include "jhall/qcombinatorics.hpp"
#include "jhall/symfunc.hpp"
#include "render.hpp"

namespace jhall::cli {
namespace {

struct Suite {
  int default_bound;
  int cap;
  std::function<void(CheckReport&, const CheckOptions&, int)> run;
};

std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }
std::string show(const RootObject& o) { return "u[" + o.to_string() + "]"; }

mpz_class at_q(const Scalar& s, int p) {
  const auto v = s.evaluate_q(mpq_class(p));
  if (!v || v->get_den() != 1) throw std::logic_error("expected an integer value at q = " + std::to_string(p));
  return v->get_num();
}

bool k0_conserved(const DerivedElem& x, int k0) {
  for (const auto& [o, c] : x.terms)
    if (o.k0_class() != k0) return false;
  return true;
}

void associativity(CheckReport& r, const CheckOptions&, int bound) {
  const auto objs = derived::root_objects_up_to(bound);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs) {
        if (a.total_weight() + b.total_weight() + c.total_weight() > 6) continue;
        ++r.cases;
        const DerivedElem x = derived::natural(a.h0, a.h1);
        const DerivedElem y = derived::natural(b.h0, b.h1);
        const DerivedElem z = derived::natural(c.h0, c.h1);
        const DerivedElem lhs = derived::derived_product(derived::derived_product(x, y), z);
        const DerivedElem rhs = derived::derived_product(x, derived::derived_product(y, z));
        const int k0 = a.k0_class() + b.k0_class() + c.k0_class();
        if (lhs != rhs || !k0_conserved(lhs, k0))
          r.failures.push_back("(" + show(a) + "*" + show(b) + ")*" + show(c) + " = " + render_text(lhs) + "; " +
                               show(a) + "*(" + show(b) + "*" + show(c) + ") = " + render_text(rhs));
      }
}

void commutativity(CheckReport& r, const CheckOptions&, int bound) {
  const auto objs = derived::root_objects_up_to(bound);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      ++r.cases;
      const DerivedElem x = derived::natural(a.h0, a.h1);
      const DerivedElem y = derived::natural(b.h0, b.h1);
      const DerivedElem lhs = derived::derived_product(x, y);
      const DerivedElem rhs = derived::derived_product(y, x);
      if (lhs != rhs || !k0_conserved(lhs, a.k0_class() + b.k0_class()))
        r.failures.push_back(show(a) + "*" + show(b) + " = " + render_text(lhs) + "; " + show(b) + "*" + show(a) +
                             " = " + render_text(rhs));
    }
}

void dd(CheckReport& r, const CheckOptions&, int bound) {
  for (const auto& lambda : partitions_up_to(bound))
    for (const auto& mu : partitions_up_to(bound)) {
      ++r.cases;
      const auto sides = derived::dd_relation_sides(lambda, mu);
      const int k0 = lambda.weight() - mu.weight();
      if (!sides.holds() || !k0_conserved(sides.lhs, k0) || !k0_conserved(sides.rhs, k0))
        r.failures.push_back("lambda=" + show(lambda) + " mu=" + show(mu) + ": lhs " + render_text(sides.lhs) +
                             "; rhs " + render_text(sides.rhs));
    }
}

void straighten(CheckReport& r, const CheckOptions&, int bound) {
  for (const auto& o : derived::root_objects_up_to(bound)) {
    ++r.cases;
    const DerivedElem nat = derived::natural(o.h0, o.h1);
    const DerivedElem back = derived::to_natural(derived::straighten(nat));
    if (back != nat) r.failures.push_back(show(o) + ": to_natural(straighten(x)) = " + render_text(back));
    ++r.cases;
    const DerivedElem nor = derived::normal(o.h0, o.h1);
    const DerivedElem again = derived::straighten(derived::to_natural(nor));
    if (again != nor)
      r.failures.push_back("u[" + o.h0.to_string() + "]*u[;" + o.h1.to_string() +
                           "]: straighten(to_natural(x)) = " + render_text(again));
  }
}

void psi(CheckReport& r, const CheckOptions& o, int bound) {
  const SymRing ring(std::max(o.degree_bound, 2 * bound));
  for (int k = 1; k <= bound; ++k) {
    ++r.cases;
    const Partition col = Partition::column(k);
    const SymFunc image = ring.convert(ring.psi(hall::basis(col)), SymBasis::Elementary);
    SymFunc expected = ring.basis_element(SymBasis::Elementary, {k});
    expected.terms *= aut_order(col) * Scalar::q_power(-k * (k - 1) / 2);
    if (image != expected)
      r.failures.push_back("psi(u[" + col.to_string() + "]) = " + render_text(image) + ", expected " +
                           render_text(expected));
  }
  const auto parts = partitions_up_to(bound);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) {
      ++r.cases;
      const HallElem x = hall::basis(parts[i]);
      const HallElem y = hall::basis(parts[j]);
      const SymFunc lhs = ring.convert(ring.psi(hall::product(x, y)), SymBasis::Monomial);
      const SymFunc rhs = ring.convert(ring.multiply(ring.psi(x), ring.psi(y)), SymBasis::Monomial);
      if (lhs != rhs)
        r.failures.push_back("psi(u" + show(parts[i]) + "*u" + show(parts[j]) + ") = " + render_text(lhs) +
                             "; psi*psi = " + render_text(rhs));
    }
}

void pairing(CheckReport& r, const CheckOptions& o, int bound) {
  const SymRing ring(std::max(o.degree_bound, bound));
  for (int n = 0; n <= bound; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        ++r.cases;
        const Scalar lhs = hall::hopf_pairing(hall::basis(a), hall::basis(b));
        const Scalar rhs = ring.power_sum_pairing(ring.psi(hall::basis(a)), ring.psi(hall::basis(b)));
        if (lhs != rhs)
          r.failures.push_back("(u" + show(a) + ", u" + show(b) + ") = " + lhs.to_string() + " but {psi, psi} = " +
                               rhs.to_string());
      }
  }
  for (int a = 1; a <= bound; ++a)
    for (int b = 1; b <= bound; ++b) {
      ++r.cases;
      const Scalar got =
          ring.power_sum_pairing(ring.basis_element(SymBasis::Power, {a}), ring.basis_element(SymBasis::Power, {b}));
      const Scalar want = a == b ? Scalar(a) / (Scalar::q_power(a) - Scalar(1)) : Scalar();
      if (got != want)
        r.failures.push_back("{p_" + std::to_string(a) + ", p_" + std::to_string(b) + "} = " + got.to_string() +
                             ", expected " + want.to_string());
    }
}

void oracle_hall(CheckReport& r, const CheckOptions& o, int bound) {
  const int p = o.p;
  if (bound > oracle::submodule_weight_cap(p))
    throw oracle::BudgetExceeded("oracle-hall: |lambda| <= " + std::to_string(oracle::submodule_weight_cap(p)) +
                                 " at p = " + std::to_string(p));
  for (const auto& lambda : partitions_up_to(bound))
    for (int k = 0; k <= lambda.weight(); ++k)
      for (const auto& mu : partitions_of(lambda.weight() - k))
        for (const auto& nu : partitions_of(k)) {
          ++r.cases;
          const mpz_class formula = at_q(hall::hall_number(lambda, mu, nu), p);
          const std::uint64_t count = oracle::count_submodules(lambda, mu, nu, p);
          if (formula != mpz_class(std::to_string(count)))
            r.failures.push_back("G^" + show(lambda) + "_" + show(mu) + show(nu) + " at q=" + std::to_string(p) +
                                 ": formula " + formula.get_str() + ", oracle " + std::to_string(count));
        }
  const int small = std::min(bound, 4);
  for (const auto& lambda : partitions_up_to(small)) {
    ++r.cases;
    try {
      const std::uint64_t count = oracle::aut_count(lambda, p);
      const mpz_class formula = at_q(aut_order(lambda), p);
      if (formula != mpz_class(std::to_string(count)))
        r.failures.push_back("|Aut" + show(lambda) + "| at q=" + std::to_string(p) + ": formula " +
                             formula.get_str() + ", oracle " + std::to_string(count));
    } catch (const oracle::BudgetExceeded&) {
      --r.cases;
      ++r.skipped;
    }
    for (const auto& mu : partitions_up_to(small)) {
      ++r.cases;
      const int formula = hom_dim(lambda, mu);
      const int count = oracle::hom_dim_oracle(lambda, mu, p);
      if (formula != count)
        r.failures.push_back("dim Hom(" + show(lambda) + ", " + show(mu) + "): formula " + std::to_string(formula) +
                             ", oracle " + std::to_string(count));
    }
  }
}

void oracle_morphisms(CheckReport& r, const CheckOptions& o, int bound) {
  const int p = o.p;
  for (const auto& lambda : partitions_up_to(bound))
    for (const auto& mu : partitions_up_to(bound)) {
      oracle::TypeHistogram h;
      try {
        h = oracle::classify_morphisms(lambda, mu, p);
      } catch (const oracle::BudgetExceeded&) {
        ++r.skipped;
        continue;
      }
      ++r.cases;
      std::uint64_t total = 0;
      for (const auto& [k, c] : h) total += c;
      std::uint64_t expected_total = 1;
      for (int i = 0; i < hom_dim(lambda, mu); ++i) expected_total *= static_cast<std::uint64_t>(p);
      std::ostringstream bad;
      if (total != expected_total) bad << " total " << total << " != p^hom_dim " << expected_total << ";";
      const int rank_max = std::min(lambda.weight(), mu.weight());
      for (int rk = 0; rk <= rank_max; ++rk)
        for (const auto& m0 : partitions_of(lambda.weight() - rk))
          for (const auto& m1 : partitions_of(mu.weight() - rk)) {
            const mpz_class formula = at_q(derived::count_maps_by_ker_coker(lambda, mu, m0, m1), p);
            auto it = h.find({m0, m1});
            const std::uint64_t count = it == h.end() ? 0 : it->second;
            if (formula != mpz_class(std::to_string(count)))
              bad << " ker " << show(m0) << " coker " << show(m1) << ": formula " << formula.get_str() << ", oracle "
                  << count << ";";
          }
      for (const auto& [k, c] : h)
        if (lambda.weight() - k.first.weight() != mu.weight() - k.second.weight())
          bad << " bucket " << show(k.first) << show(k.second) << " breaks the rank balance;";
      if (!bad.str().empty())
        r.failures.push_back("Hom(" + show(lambda) + ", " + show(mu) + ") at p=" + std::to_string(p) + ":" + bad.str());
    }
}

void appendix(CheckReport& r, const CheckOptions& o, int bound) {
  std::uint64_t seed = o.seed;
  const auto rep = oracle::appendix_random_check(o.p, bound, o.trials, seed++);
  r.cases += rep.accepted;
  if (!rep.ok())
    r.failures.push_back("rank identity: " + std::to_string(rep.failures) + " failures in " +
                         std::to_string(rep.accepted) + " of " + std::to_string(rep.requested) + " samples");
  for (int n = 0; n <= bound; ++n) {
    const auto rep = oracle::lemma_square_check(o.p, n, o.trials, seed++);
    r.cases += rep.accepted;
    if (!rep.ok())
      r.failures.push_back("exact squares in dimension " + std::to_string(n) + ": " + std::to_string(rep.failures) +
                           " failures");
  }
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s{
      {"associativity", {2, 3, associativity}},
      {"commutativity", {3, 4, commutativity}},
      {"dd", {4, 5, dd}},
      {"straighten", {6, 8, straighten}},
      {"psi", {5, 6, psi}},
      {"pairing", {4, 6, pairing}},
      {"oracle-hall", {-1, 5, oracle_hall}},
      {"oracle-morphisms", {4, 5, oracle_morphisms}},
      {"appendix", {6, oracle::kMaxAppendixDimension, appendix}},
  };
  return s;
}

}  // namespace

std::string CheckReport::summary() const {
  std::string s = suite + " (bound " + std::to_string(bound) + "): " + std::to_string(cases) + " cases";
  if (skipped) s += ", " + std::to_string(skipped) + " skipped over budget";
  s += passed() ? ", pass" : ", " + std::to_string(failures.size()) + " FAILED";
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, s] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

CheckReport run_check(const std::string& suite, const CheckOptions& options) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (options.p != 2 && options.p != 3) throw std::invalid_argument("--p must be 2 or 3");
  if (options.trials < 1) throw std::invalid_argument("--trials must be positive");
  if (options.bound && *options.bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const Suite& s = it->second;
  int bound = options.bound.value_or(s.default_bound);
  if (bound < 0) bound = oracle::submodule_weight_cap(options.p);
  if (bound > s.cap)
    throw oracle::BudgetExceeded(suite + ": bound " + std::to_string(bound) + " exceeds the cap " +
                                 std::to_string(s.cap));
  CheckReport r;
  r.suite = suite;
  r.bound = bound;
  s.run(r, options, bound);
  return r;
}

}  // namespace jhall::cli
