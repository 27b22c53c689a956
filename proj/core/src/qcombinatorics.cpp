#include "jhall/qcombinatorics.hpp"

#include <algorithm>

namespace jhall {

Scalar aut_order(const Partition& lambda) {
  Scalar a = Scalar::q_power(lambda.weight() + 2 * lambda.n_stat());
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    for (int j = 1; j <= m[i]; ++j) a *= Scalar(1) - Scalar::q_power(-j);
  return a;
}

int hom_dim(const Partition& lambda, const Partition& mu) {
  int d = 0;
  for (int a : lambda.parts())
    for (int b : mu.parts()) d += std::min(a, b);
  return d;
}

Scalar gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Scalar();
  Scalar r(1);
  for (int i = 1; i <= k; ++i) r *= (Scalar(1) - Scalar::q_power(n - k + i)) / (Scalar(1) - Scalar::q_power(i));
  return r;
}

Scalar v_integer(int r) {
  return (Scalar::v_power(r) - Scalar::v_power(-r)) / (Scalar::v() - Scalar::v_power(-1));
}

}  // namespace jhall
