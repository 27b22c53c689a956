#pragma once

#include <random>
#include <vector>

#include "jhall/partition.hpp"
#include "jhall/scalar.hpp"

namespace jhall::testing {

inline Scalar q() { return Scalar::q(); }
inline Scalar v() { return Scalar::v(); }

/// c0 + c1 q + c2 q^2 + ...
inline Scalar q_poly(std::initializer_list<long> ascending) {
  Scalar s;
  int k = 0;
  for (long c : ascending) s += Scalar(c) * Scalar::q_power(k++);
  return s;
}

/// Random Laurent-ish rational function in v with small integer coefficients.
class ScalarGen {
 public:
  explicit ScalarGen(std::uint64_t seed) : rng_(seed) {}

  Scalar poly(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-4, 4);
    const int d = deg(rng_);
    Scalar s;
    for (int k = 0; k <= d; ++k) s += Scalar(coef(rng_)) * Scalar::v_power(k);
    return s;
  }

  Scalar operator()() {
    Scalar den;
    while (den.is_zero()) den = poly(3);
    std::uniform_int_distribution<int> shift(-2, 2);
    return poly(4) / den * Scalar::v_power(shift(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

inline Partition random_partition(std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  const auto parts = partitions_of(w(rng));
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  return parts[pick(rng)];
}

}  // namespace jhall::testing
