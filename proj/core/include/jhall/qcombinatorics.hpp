#pragma once

#include "jhall/partition.hpp"
#include "jhall/scalar.hpp"

namespace jhall {

/// |Aut S^(lambda)| as a polynomial in q:
/// a_lambda(q) = q^{|lambda| + 2 n(lambda)} prod_i phi_{m_i}(q^{-1}),
/// phi_m(t) = (1-t)(1-t^2)...(1-t^m).
Scalar aut_order(const Partition& lambda);

/// dim Hom(S^(lambda), S^(mu)) = sum_{i,j} min(lambda_i, mu_j).
/// For the Jordan quiver this is also dim Ext^1.
int hom_dim(const Partition& lambda, const Partition& mu);

/// q-binomial [n choose k]_q; zero when k > n or k < 0.
Scalar gaussian_binomial(int n, int k);

/// Balanced v-integer [r]_v = (v^r - v^{-r}) / (v - v^{-1}).
Scalar v_integer(int r);

}  // namespace jhall
