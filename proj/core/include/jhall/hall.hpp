#pragma once

#include <utility>

#include "jhall/lincomb.hpp"
#include "jhall/partition.hpp"
#include "jhall/scalar.hpp"

namespace jhall {

/// Element of the twisted Hall algebra of nilpotent Jordan-quiver modules,
/// in the basis of isoclasses u_lambda = [S^(lambda)].
using HallElem = LinComb<Partition>;
using PartitionPair = std::pair<Partition, Partition>;
/// Element of the tensor square, keyed by (first leg, second leg).
using TensorHallElem = LinComb<PartitionPair>;

namespace hall {

inline HallElem basis(const Partition& lambda) { return HallElem(lambda); }
inline HallElem unit() { return HallElem(Partition{}); }

/// Number of submodules X of S^(lambda) with X = S^(1^r) and quotient
/// S^(mu): q^{n(lambda) - n(mu) - n(1^r)} times the product over columns of
/// q^{-1}-binomials [lambda'_i - lambda'_{i+1}, lambda'_i - mu'_i] when
/// lambda/mu is a vertical r-strip, zero otherwise.
Scalar pieri_coeff(const Partition& lambda, const Partition& mu, int r);

/// x o u_(1^r) in the Hall-number convention (structure constants G).
HallElem pieri_step(const HallElem& x, int r);

/// E_nu = u_(1^{nu'_1}) o u_(1^{nu'_2}) o ... in the Hall-number convention.
/// Unitriangular: u_nu plus terms u_lambda with lambda strictly dominated.
HallElem elementary_product(const Partition& nu);

/// Coefficients d with u_nu = sum_kappa d_kappa E_kappa, obtained by a
/// triangular solve that visits partitions along `ext`. Throws
/// std::logic_error if `ext` does not refine the support of the E_kappa.
const HallElem& elementary_expansion(const Partition& nu,
                                     DominanceExtension ext = DominanceExtension::ReverseLex);

/// u_mu o u_nu = sum_lambda G^lambda_{mu nu} u_lambda (memoized).
const HallElem& hall_row(const Partition& mu, const Partition& nu,
                         DominanceExtension ext = DominanceExtension::ReverseLex);

/// Hall polynomial G^lambda_{mu nu}: the number of submodules X of
/// S^(lambda) with X = S^(nu) and S^(lambda)/X = S^(mu).
Scalar hall_number(const Partition& lambda, const Partition& mu, const Partition& nu,
                   DominanceExtension ext = DominanceExtension::ReverseLex);

/// Twisted Hall product. On basis elements
/// u_M * u_N = <M,N>^{1/2} sum_L G^L_{MN} a_M a_N / a_L u_L.
HallElem product(const HallElem& x, const HallElem& y);

/// Green's coproduct, Delta(u_A) = sum_{B,C} <B,C>^{1/2} G^A_{BC} u_B (x) u_C.
TensorHallElem coproduct(const HallElem& x);
Scalar counit(const HallElem& x);

/// (u_M, u_N) = delta_{MN} a_M.
Scalar hopf_pairing(const HallElem& x, const HallElem& y);
/// Factorwise pairing on the tensor square.
Scalar hopf_pairing(const TensorHallElem& x, const TensorHallElem& y);

TensorHallElem tensor(const HallElem& x, const HallElem& y);
/// (a (x) b)(c (x) d) = ac (x) bd.
TensorHallElem tensor_product(const TensorHallElem& x, const TensorHallElem& y);

/// Largest basis weight occurring; -1 for zero.
int max_weight(const HallElem& x);

}  // namespace hall
}  // namespace jhall
