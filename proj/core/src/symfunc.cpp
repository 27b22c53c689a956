#include "jhall/symfunc.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "jhall/memo.hpp"
#include "jhall/qcombinatorics.hpp"

namespace jhall {
namespace {

using Expansion = LinComb<Partition>;
using Table = std::map<Partition, Expansion>;

// m_lambda m_mu = sum_nu c m_nu, c = number of ways to write the exponent
// vector nu as a rearrangement of lambda plus a rearrangement of mu.
const Expansion& monomial_product(const Partition& lambda, const Partition& mu) {
  static MemoCache<std::pair<Partition, Partition>, Expansion> cache;
  return cache.get_or_compute({lambda, mu}, [&] {
    Expansion out;
    const int n = lambda.weight() + mu.weight();
    const std::size_t max_len = lambda.length() + mu.length();
    const std::size_t min_len = std::max(lambda.length(), mu.length());
    for (const auto& nu : partitions_of(n)) {
      if (nu.length() > max_len || nu.length() < min_len) continue;
      std::vector<int> alpha(nu.length(), 0);
      for (std::size_t i = 0; i < lambda.length(); ++i) alpha[i] = lambda.part(i);
      std::sort(alpha.begin(), alpha.end());
      long count = 0;
      do {
        std::vector<int> beta(nu.length());
        bool ok = true;
        for (std::size_t i = 0; i < nu.length() && ok; ++i) {
          beta[i] = nu.part(i) - alpha[i];
          ok = beta[i] >= 0;
        }
        if (ok && Partition::from_unsorted(beta) == mu) ++count;
      } while (std::next_permutation(alpha.begin(), alpha.end()));
      if (count) out.add(nu, Scalar(count));
    }
    return out;
  });
}

Expansion multiply_monomial(const Expansion& f, const Expansion& g) {
  Expansion out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add_scaled(monomial_product(a, b), ca * cb);
  return out;
}

Expansion product_of_rows(const Partition& lambda, bool elementary) {
  Expansion acc(Partition{});
  for (int r : lambda.parts()) acc = multiply_monomial(acc, Expansion(elementary ? Partition::column(r) : Partition{r}));
  return acc;
}

// Inverts the transition b_lambda = sum_mu A[lambda][mu] m_mu among the
// partitions of one weight, returning m_mu = sum_lambda B[mu][lambda] b_lambda.
Table invert(const std::vector<Partition>& parts, const Table& forward) {
  const std::size_t n = parts.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[parts[i]] = i;
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [mu, c] : forward.at(parts[i])) a[i][index.at(mu)] = c;
    a[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[piv], a[col]);
    if (!a[col][col].is_one()) {
      const Scalar inv = a[col][col].inverse();
      for (auto& x : a[col])
        if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (std::size_t k = col; k < 2 * n; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  // Row i now reads: m_{parts[i]} = sum_j a[i][n+j] b_{parts[j]}.
  Table inverse;
  for (std::size_t i = 0; i < n; ++i) {
    Expansion e;
    for (std::size_t j = 0; j < n; ++j) e.add(parts[j], a[i][n + j]);
    inverse.emplace(parts[i], std::move(e));
  }
  return inverse;
}

// m_mu in the power-sum basis (rational constants).
const Table& monomial_to_power(int n) {
  static MemoCache<int, Table> cache;
  return cache.get_or_compute(n, [&] {
    const auto parts = partitions_of(n);
    Table forward;
    for (const auto& p : parts) forward.emplace(p, product_of_rows(p, false));
    return invert(parts, forward);
  });
}

Scalar hl_weight_in_t(const Partition& rho) {
  Scalar w(rho.z_factor());
  for (int r : rho.parts()) w /= Scalar(1) - Scalar::v_power(r);
  return w;
}

Expansion to_power_coords(const Expansion& f_monomial) {
  Expansion out;
  for (const auto& [mu, c] : f_monomial) out.add_scaled(monomial_to_power(mu.weight()).at(mu), c);
  return out;
}

// Gram-Schmidt of the monomial basis of degree n in the t-domain.
const Table& hl_table_in_t(int n, DominanceExtension ext) {
  static MemoCache<std::pair<int, DominanceExtension>, Table> cache;
  return cache.get_or_compute({n, ext}, [&] {
    auto order = ordered_partitions(n, ext);
    std::reverse(order.begin(), order.end());
    struct Done {
      Partition lambda;
      Expansion weighted_power;  // p-coordinates times the t-weight
      Scalar norm;
    };
    std::vector<Done> done;
    Table table;
    for (const auto& lambda : order) {
      const Expansion m_power = to_power_coords(Expansion(lambda));
      Expansion vec(lambda);
      for (const auto& d : done) {
        Scalar ip;
        for (const auto& [rho, c] : m_power) ip += c * d.weighted_power.coefficient(rho);
        if (ip.is_zero()) continue;
        vec.add_scaled(table.at(d.lambda), -(ip / d.norm));
      }
      Expansion weighted;
      Scalar norm;
      for (const auto& [rho, c] : to_power_coords(vec)) {
        Scalar wc = c * hl_weight_in_t(rho);
        norm += c * wc;
        weighted.add(rho, wc);
      }
      done.push_back({lambda, std::move(weighted), norm});
      table.emplace(lambda, std::move(vec));
    }
    return table;
  });
}

Expansion substitute_t(const Expansion& e) {
  Expansion out;
  for (const auto& [p, c] : e) out.add(p, c.substitute_power(-2));
  return out;
}

const Expansion& to_monomial(SymBasis basis, const Partition& lambda, DominanceExtension ext) {
  static MemoCache<std::tuple<SymBasis, Partition, DominanceExtension>, Expansion> cache;
  if (basis != SymBasis::HallLittlewood) ext = DominanceExtension::ReverseLex;
  return cache.get_or_compute({basis, lambda, ext}, [&] {
    switch (basis) {
      case SymBasis::Monomial:
        return Expansion(lambda);
      case SymBasis::Power:
        return product_of_rows(lambda, false);
      case SymBasis::Elementary:
        return product_of_rows(lambda, true);
      case SymBasis::HallLittlewood:
        return substitute_t(hl_table_in_t(lambda.weight(), ext).at(lambda));
    }
    throw std::logic_error("unknown basis");
  });
}

const Table& from_monomial(SymBasis basis, int n, DominanceExtension ext) {
  static MemoCache<std::tuple<SymBasis, int, DominanceExtension>, Table> cache;
  if (basis != SymBasis::HallLittlewood) ext = DominanceExtension::ReverseLex;
  return cache.get_or_compute({basis, n, ext}, [&] {
    const auto parts = partitions_of(n);
    Table forward;
    if (basis == SymBasis::HallLittlewood) {
      // Invert in the t-domain where the entries are polynomials.
      for (const auto& p : parts) forward.emplace(p, hl_table_in_t(n, ext).at(p));
      Table inv = invert(parts, forward);
      for (auto& [p, e] : inv) e = substitute_t(e);
      return inv;
    }
    for (const auto& p : parts) forward.emplace(p, to_monomial(basis, p, ext));
    return invert(parts, forward);
  });
}

}  // namespace

char basis_letter(SymBasis b) {
  switch (b) {
    case SymBasis::Monomial:
      return 'm';
    case SymBasis::Elementary:
      return 'e';
    case SymBasis::Power:
      return 'p';
    case SymBasis::HallLittlewood:
      return 'P';
  }
  return '?';
}

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [p, c] : terms) d = std::max(d, p.weight());
  return d;
}

DegreeBoundExceeded::DegreeBoundExceeded(int degree, int bound)
    : std::runtime_error("degree " + std::to_string(degree) + " exceeds the degree bound " + std::to_string(bound)),
      degree_(degree),
      bound_(bound) {}

Scalar psi_scale(const Partition& lambda) {
  static MemoCache<Partition, Scalar> cache;
  return cache.get_or_compute(lambda, [&] { return Scalar::q_power(-lambda.n_stat()) * aut_order(lambda); });
}

SymRing::SymRing(int degree_bound, DominanceExtension ext) : bound_(degree_bound), ext_(ext) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

void SymRing::check_degree(int degree) const {
  if (degree > bound_) throw DegreeBoundExceeded(degree, bound_);
}

void SymRing::check(const SymFunc& f) const { check_degree(f.degree()); }

SymFunc SymRing::basis_element(SymBasis basis, const Partition& lambda) const {
  check_degree(lambda.weight());
  return {Expansion(lambda), basis};
}

SymFunc SymRing::one(SymBasis basis) const { return {Expansion(Partition{}), basis}; }

SymFunc SymRing::convert(const SymFunc& f, SymBasis target) const {
  check(f);
  if (f.basis == target) return f;
  Expansion m;
  for (const auto& [p, c] : f.terms) m.add_scaled(to_monomial(f.basis, p, ext_), c);
  if (target == SymBasis::Monomial) return {std::move(m), target};
  Expansion out;
  for (const auto& [p, c] : m) out.add_scaled(from_monomial(target, p.weight(), ext_).at(p), c);
  return {std::move(out), target};
}

SymFunc SymRing::multiply(const SymFunc& f, const SymFunc& g) const {
  check(f);
  check(g);
  if (!f.terms.empty() && !g.terms.empty()) check_degree(f.degree() + g.degree());
  if (f.basis == g.basis && (f.basis == SymBasis::Power || f.basis == SymBasis::Elementary)) {
    Expansion out;
    for (const auto& [a, ca] : f.terms)
      for (const auto& [b, cb] : g.terms) {
        std::vector<int> parts = a.parts();
        parts.insert(parts.end(), b.parts().begin(), b.parts().end());
        out.add(Partition::from_unsorted(std::move(parts)), ca * cb);
      }
    return {std::move(out), f.basis};
  }
  const SymFunc fm = convert(f, SymBasis::Monomial);
  const SymFunc gm = convert(g, SymBasis::Monomial);
  return convert({multiply_monomial(fm.terms, gm.terms), SymBasis::Monomial}, f.basis);
}

const LinComb<Partition>& SymRing::hl_P_in_t(const Partition& lambda) const {
  check_degree(lambda.weight());
  return hl_table_in_t(lambda.weight(), ext_).at(lambda);
}

SymFunc SymRing::hl_P(const Partition& lambda) const {
  check_degree(lambda.weight());
  return {to_monomial(SymBasis::HallLittlewood, lambda, ext_), SymBasis::Monomial};
}

Scalar SymRing::hl_scalar_product_in_t(const LinComb<Partition>& f_monomial,
                                       const LinComb<Partition>& g_monomial) const {
  const Expansion fp = to_power_coords(f_monomial);
  const Expansion gp = to_power_coords(g_monomial);
  Scalar s;
  for (const auto& [rho, c] : fp) {
    Scalar d = gp.coefficient(rho);
    if (!d.is_zero()) s += c * d * hl_weight_in_t(rho);
  }
  return s;
}

Scalar SymRing::power_sum_pairing(const SymFunc& f, const SymFunc& g) const {
  const SymFunc fp = convert(f, SymBasis::Power);
  const SymFunc gp = convert(g, SymBasis::Power);
  Scalar s;
  for (const auto& [rho, c] : fp.terms) {
    Scalar d = gp.terms.coefficient(rho);
    if (d.is_zero()) continue;
    Scalar w(rho.z_factor());
    for (int r : rho.parts()) w /= Scalar::q_power(r) - Scalar(1);
    s += c * d * w;
  }
  return s;
}

SymFunc SymRing::psi(const HallElem& x) const {
  Expansion out;
  for (const auto& [lambda, c] : x) {
    check_degree(lambda.weight());
    out.add(lambda, c * psi_scale(lambda));
  }
  return {std::move(out), SymBasis::HallLittlewood};
}

HallElem SymRing::psi_inv(const SymFunc& f) const {
  const SymFunc hl = convert(f, SymBasis::HallLittlewood);
  HallElem out;
  for (const auto& [lambda, c] : hl.terms) out.add(lambda, c / psi_scale(lambda));
  return out;
}

TensorSymFunc SymRing::theta(const DerivedElem& x) const {
  const DerivedElem n = derived::straighten(x);
  TensorSymFunc out{{}, SymBasis::HallLittlewood};
  for (const auto& [o, c] : n.terms) {
    check_degree(o.h0.weight());
    check_degree(o.h1.weight());
    out.terms.add({o.h0, o.h1}, c * psi_scale(o.h0) * psi_scale(o.h1));
  }
  return out;
}

TensorSymFunc SymRing::convert(const TensorSymFunc& f, SymBasis target) const {
  if (f.basis == target) return f;
  TensorSymFunc out{{}, target};
  for (const auto& [k, c] : f.terms) {
    const SymFunc left = convert(basis_element(f.basis, k.first), target);
    const SymFunc right = convert(basis_element(f.basis, k.second), target);
    for (const auto& [a, ca] : left.terms)
      for (const auto& [b, cb] : right.terms) out.terms.add({a, b}, c * ca * cb);
  }
  return out;
}

TensorSymFunc SymRing::multiply(const TensorSymFunc& f, const TensorSymFunc& g) const {
  const TensorSymFunc gb = convert(g, f.basis);
  TensorSymFunc out{{}, f.basis};
  for (const auto& [k1, c1] : f.terms)
    for (const auto& [k2, c2] : gb.terms) {
      const SymFunc left = multiply(basis_element(f.basis, k1.first), basis_element(f.basis, k2.first));
      const SymFunc right = multiply(basis_element(f.basis, k1.second), basis_element(f.basis, k2.second));
      for (const auto& [a, ca] : left.terms)
        for (const auto& [b, cb] : right.terms) out.terms.add({a, b}, c1 * c2 * ca * cb);
    }
  return out;
}

HallElem SymRing::torsion_T(int r, int d) const {
  if (r < 1 || d < 1) throw std::invalid_argument("torsion_T: r and d must be positive");
  if (r % d != 0) return {};
  const HallElem base = psi_inv(basis_element(SymBasis::Power, Partition{r / d}));
  const Scalar factor = v_integer(r) * Scalar::rational(d, r);
  HallElem out;
  for (const auto& [lambda, c] : base) out.add(lambda, c.substitute_power(d) * factor);
  return out;
}

}  // namespace jhall
