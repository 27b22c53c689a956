#include "jhall/hall.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "jhall/euler_form.hpp"
#include "jhall/memo.hpp"
#include "jhall/qcombinatorics.hpp"

namespace jhall::hall {
namespace {

using ExpansionTable = std::map<Partition, HallElem>;

MemoCache<std::pair<Partition, Partition>, HallElem>& basis_product_cache() {
  static MemoCache<std::pair<Partition, Partition>, HallElem> cache;
  return cache;
}

MemoCache<Partition, Scalar>& aut_cache() {
  static MemoCache<Partition, Scalar> cache;
  return cache;
}

const Scalar& cached_aut(const Partition& p) {
  return aut_cache().get_or_compute(p, [&] { return aut_order(p); });
}

const ExpansionTable& expansion_table(int n, DominanceExtension ext) {
  static MemoCache<std::pair<int, DominanceExtension>, ExpansionTable> cache;
  return cache.get_or_compute({n, ext}, [&] {
    auto order = ordered_partitions(n, ext);
    std::reverse(order.begin(), order.end());  // smallest first
    ExpansionTable done;
    for (const auto& kappa : order) {
      const HallElem e = elementary_product(kappa);
      if (e.coefficient(kappa) != Scalar(1))
        throw std::logic_error("elementary product is not unitriangular at " + kappa.to_string());
      // u_kappa = E_kappa - sum_{lambda != kappa} c_lambda u_lambda
      HallElem res(kappa);
      for (const auto& [lambda, c] : e) {
        if (lambda == kappa) continue;
        auto it = done.find(lambda);
        if (it == done.end())
          throw std::logic_error("dominance extension does not refine the support of E_" + kappa.to_string());
        res.add_scaled(it->second, -c);
      }
      done.emplace(kappa, std::move(res));
    }
    return done;
  });
}

HallElem pieri_chain(HallElem x, const Partition& kappa) {
  const Partition columns = kappa.conjugate();
  for (int r : columns.parts()) x = pieri_step(x, r);
  return x;
}

}  // namespace

Scalar pieri_coeff(const Partition& lambda, const Partition& mu, int r) {
  if (!vertical_strip(lambda, mu, r)) return Scalar();
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  Scalar g = Scalar::q_power(lambda.n_stat() - mu.n_stat() - Partition::column(r).n_stat());
  for (std::size_t i = 0; i < lc.length(); ++i) {
    const int n = lc.part(i) - lc.part(i + 1);
    const int k = lc.part(i) - mc.part(i);
    // binomial in q^{-1}
    g *= gaussian_binomial(n, k).substitute_power(-1);
  }
  return g;
}

HallElem pieri_step(const HallElem& x, int r) {
  static MemoCache<std::pair<Partition, int>, HallElem> cache;
  HallElem out;
  for (const auto& [mu, c] : x) {
    const HallElem& row = cache.get_or_compute({mu, r}, [&] {
      HallElem h;
      for (const auto& lambda : add_vertical_strip(mu, r)) h.add(lambda, pieri_coeff(lambda, mu, r));
      return h;
    });
    out.add_scaled(row, c);
  }
  return out;
}

HallElem elementary_product(const Partition& nu) { return pieri_chain(unit(), nu); }

const HallElem& elementary_expansion(const Partition& nu, DominanceExtension ext) {
  return expansion_table(nu.weight(), ext).at(nu);
}

const HallElem& hall_row(const Partition& mu, const Partition& nu, DominanceExtension ext) {
  static MemoCache<std::tuple<Partition, Partition, DominanceExtension>, HallElem> cache;
  return cache.get_or_compute({mu, nu, ext}, [&] {
    HallElem row;
    for (const auto& [kappa, d] : elementary_expansion(nu, ext)) row.add_scaled(pieri_chain(basis(mu), kappa), d);
    return row;
  });
}

Scalar hall_number(const Partition& lambda, const Partition& mu, const Partition& nu, DominanceExtension ext) {
  if (lambda.weight() != mu.weight() + nu.weight()) return Scalar();
  return hall_row(mu, nu, ext).coefficient(lambda);
}

HallElem product(const HallElem& x, const HallElem& y) {
  const EulerForm& form = EulerForm::jordan();
  HallElem out;
  for (const auto& [m, cm] : x) {
    for (const auto& [n, cn] : y) {
      const HallElem& p = basis_product_cache().get_or_compute({m, n}, [&] {
        HallElem h;
        const Scalar prefactor = form.half(m.weight(), n.weight()) * cached_aut(m) * cached_aut(n);
        for (const auto& [l, g] : hall_row(m, n)) h.add(l, g * prefactor / cached_aut(l));
        return h;
      });
      out.add_scaled(p, cm * cn);
    }
  }
  return out;
}

TensorHallElem coproduct(const HallElem& x) {
  static MemoCache<Partition, TensorHallElem> cache;
  const EulerForm& form = EulerForm::jordan();
  TensorHallElem out;
  for (const auto& [a, ca] : x) {
    const TensorHallElem& d = cache.get_or_compute(a, [&] {
      TensorHallElem t;
      const int n = a.weight();
      for (int k = 0; k <= n; ++k)
        for (const auto& b : partitions_of(k))
          for (const auto& c : partitions_of(n - k)) {
            Scalar g = hall_number(a, b, c);
            if (!g.is_zero()) t.add({b, c}, form.half(b.weight(), c.weight()) * g);
          }
      return t;
    });
    out.add_scaled(d, ca);
  }
  return out;
}

Scalar counit(const HallElem& x) { return x.coefficient(Partition{}); }

Scalar hopf_pairing(const HallElem& x, const HallElem& y) {
  Scalar s;
  for (const auto& [m, c] : x) {
    Scalar d = y.coefficient(m);
    if (!d.is_zero()) s += c * d * cached_aut(m);
  }
  return s;
}

Scalar hopf_pairing(const TensorHallElem& x, const TensorHallElem& y) {
  Scalar s;
  for (const auto& [k, c] : x) {
    Scalar d = y.coefficient(k);
    if (!d.is_zero()) s += c * d * cached_aut(k.first) * cached_aut(k.second);
  }
  return s;
}

TensorHallElem tensor(const HallElem& x, const HallElem& y) {
  TensorHallElem t;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) t.add({a, b}, ca * cb);
  return t;
}

TensorHallElem tensor_product(const TensorHallElem& x, const TensorHallElem& y) {
  TensorHallElem out;
  for (const auto& [k1, c1] : x)
    for (const auto& [k2, c2] : y) {
      const HallElem left = product(basis(k1.first), basis(k2.first));
      const HallElem right = product(basis(k1.second), basis(k2.second));
      out.add_scaled(tensor(left, right), c1 * c2);
    }
  return out;
}

int max_weight(const HallElem& x) {
  int w = -1;
  for (const auto& [p, c] : x) w = std::max(w, p.weight());
  return w;
}

}  // namespace jhall::hall
