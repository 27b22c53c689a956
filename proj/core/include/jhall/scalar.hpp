#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jhall {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending order of degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)

  /// c * x^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const mpz_class& leading() const { return c_.back(); }
  [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return c_; }
  [[nodiscard]] mpz_class coefficient(std::size_t k) const;
  [[nodiscard]] bool is_one() const;

  /// gcd of the coefficients, nonnegative.
  [[nodiscard]] mpz_class content() const;
  /// Only even powers of x occur.
  [[nodiscard]] bool is_even() const;
  /// Lowest power of x with nonzero coefficient (0 for the zero polynomial).
  [[nodiscard]] std::size_t valuation() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Divides every coefficient by c; c must divide each one.
  [[nodiscard]] IntPoly divide_exact(const mpz_class& c) const;
  /// Polynomial quotient a / b where b divides a over Z[x].
  [[nodiscard]] IntPoly divide_exact(const IntPoly& b) const;
  /// f(x) -> x^k f(x)
  [[nodiscard]] IntPoly shift(std::size_t k) const;
  /// f(x) -> f(x^k), k >= 1
  [[nodiscard]] IntPoly spread(std::size_t k) const;
  /// f(x) -> x^deg(f) f(1/x)
  [[nodiscard]] IntPoly reversed() const;

  [[nodiscard]] mpq_class evaluate(const mpq_class& x) const;

  /// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Element of the rational function field Q(v), with q = v^2.
///
/// Stored as a reduced pair num/den of integer polynomials in v:
/// gcd(num, den) = 1 over Q, the joint integer content of (num, den) is 1,
/// and den has a positive leading coefficient. Zero is 0/1. Equality of the
/// stored pair is therefore equality in the field.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar from_mpq(const mpq_class& x);
  static Scalar fraction(IntPoly num, IntPoly den);
  static Scalar polynomial(IntPoly num) { return fraction(std::move(num), IntPoly(1)); }

  /// The indeterminate v.
  static Scalar v() { return v_power(1); }
  /// q = v^2.
  static Scalar q() { return v_power(2); }
  static Scalar v_power(int k);
  static Scalar q_power(int k) { return v_power(2 * k); }

  [[nodiscard]] const IntPoly& numerator() const { return num_; }
  [[nodiscard]] const IntPoly& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Numerator and denominator involve only even powers of v, i.e. the value
  /// is a rational function of q.
  [[nodiscard]] bool is_even() const { return num_.is_even() && den_.is_even(); }
  /// Denominator is a positive integer constant.
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  [[nodiscard]] bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(int k) const;

  /// f(v) -> f(v^k) for any nonzero integer k.
  [[nodiscard]] Scalar substitute_power(int k) const;

  /// Value at v = x; nullopt when x is a pole.
  [[nodiscard]] std::optional<mpq_class> evaluate_v(const mpq_class& x) const;
  /// Value at q = x. Even scalars need no square root; otherwise x must be
  /// the square of a rational. nullopt at poles or irrational v.
  [[nodiscard]] std::optional<mpq_class> evaluate_q(const mpq_class& x) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Human-readable form. Even scalars are written in `q`, others in `v`.
  [[nodiscard]] std::string to_string() const;
  /// Written in the given variable without halving exponents.
  [[nodiscard]] std::string to_string_in(std::string_view var) const;
  /// Same as to_string but parenthesized when it is not a single atom, for
  /// use as a coefficient.
  [[nodiscard]] std::string to_coefficient_string() const;

 private:
  Scalar(IntPoly num, IntPoly den, bool /*normalized*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Writes a polynomial in `var` with exponents divided by `step` (step 2
/// writes an even polynomial in v as a polynomial in q).
std::string format_polynomial(const IntPoly& p, std::string_view var, int step = 1);

}  // namespace jhall
