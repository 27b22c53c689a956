#include "jhall/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jhall {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool IntPoly::is_even() const {
  for (std::size_t k = 1; k < c_.size(); k += 2)
    if (c_[k] != 0) return false;
  return true;
}

std::size_t IntPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return k;
  return 0;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::divide_exact(const mpz_class& c) const {
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& b) const {
  if (b.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
  if (is_zero()) return {};
  const int db = b.degree();
  const int da = degree();
  if (da < db) throw std::logic_error("IntPoly: inexact division");
  std::vector<mpz_class> r = c_;
  std::vector<mpz_class> quo(static_cast<std::size_t>(da - db + 1));
  const mpz_class& lb = b.leading();
  for (int i = da - db; i >= 0; --i) {
    mpz_class& top = r[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::logic_error("IntPoly: inexact division");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), qc.get_mpz_t(), b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    quo[static_cast<std::size_t>(i)] = std::move(qc);
  }
  for (const auto& x : r)
    if (x != 0) throw std::logic_error("IntPoly: inexact division");
  return IntPoly(std::move(quo));
}

IntPoly IntPoly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::spread(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("IntPoly::spread: k must be positive");
  if (is_zero() || k == 1) return *this;
  std::vector<mpz_class> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> v(c_.rbegin(), c_.rend());
  return IntPoly(std::move(v));
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  IntPoly r = c == 1 ? p : p.divide_exact(c);
  if (r.leading() < 0) r = -r;
  return r;
}

// lc(b)^k * a mod b for a suitable k; only its primitive part is used.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  std::vector<mpz_class> r = a.coefficients();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    mpz_class lr = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    const int off = dr - db;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(off + j)].get_mpz_t(), lr.get_mpz_t(),
                 b.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
    if (dr >= 0) {
      // Keep coefficient growth in check between steps.
      mpz_class g = IntPoly(r).content();
      if (g > 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly(1);
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  Scalar s(IntPoly(std::vector<mpz_class>{num}), IntPoly(std::vector<mpz_class>{den}), false);
  s.normalize();
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& x) { return rational(x.get_num(), x.get_den()); }

Scalar Scalar::fraction(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  Scalar s(std::move(num), std::move(den), false);
  s.normalize();
  return s;
}

Scalar Scalar::v_power(int k) {
  if (k >= 0) return Scalar(IntPoly::monomial(1, static_cast<std::size_t>(k)), IntPoly(1), true);
  return Scalar(IntPoly(1), IntPoly::monomial(1, static_cast<std::size_t>(-k)), true);
}

void Scalar::normalize() {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    const std::size_t k = std::min(num_.valuation(), den_.valuation());
    if (k > 0) {
      num_ = IntPoly(std::vector<mpz_class>(num_.coefficients().begin() + static_cast<std::ptrdiff_t>(k), num_.coefficients().end()));
      den_ = IntPoly(std::vector<mpz_class>(den_.coefficients().begin() + static_cast<std::ptrdiff_t>(k), den_.coefficients().end()));
    }
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  mpz_class c = num_.content();
  mpz_class d = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divide_exact(c);
    den_ = den_.divide_exact(c);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar r(den_, num_, true);
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Scalar Scalar::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("Scalar::substitute_power: k must be nonzero");
  if (k > 0) return Scalar(num_.spread(static_cast<std::size_t>(k)), den_.spread(static_cast<std::size_t>(k)), true);
  const auto m = static_cast<std::size_t>(-k);
  IntPoly n = num_.reversed().spread(m);
  IntPoly d = den_.reversed().spread(m);
  const int shift = static_cast<int>(m) * (den_.degree() - num_.degree());
  if (shift > 0) n = n.shift(static_cast<std::size_t>(shift));
  if (shift < 0) d = d.shift(static_cast<std::size_t>(-shift));
  return fraction(std::move(n), std::move(d));
}

std::optional<mpq_class> Scalar::evaluate_v(const mpq_class& x) const {
  mpq_class d = den_.evaluate(x);
  if (d == 0) return std::nullopt;
  mpq_class r = num_.evaluate(x) / d;
  r.canonicalize();
  return r;
}

std::optional<mpq_class> Scalar::evaluate_q(const mpq_class& x) const {
  if (is_even()) {
    auto halve = [](const IntPoly& p) {
      std::vector<mpz_class> c;
      for (std::size_t k = 0; k < p.coefficients().size(); k += 2) c.push_back(p.coefficients()[k]);
      return IntPoly(std::move(c));
    };
    mpq_class d = halve(den_).evaluate(x);
    if (d == 0) return std::nullopt;
    mpq_class r = halve(num_).evaluate(x) / d;
    r.canonicalize();
    return r;
  }
  if (x < 0) return std::nullopt;
  mpq_class y = x;
  y.canonicalize();
  if (!mpz_perfect_square_p(y.get_num_mpz_t()) || !mpz_perfect_square_p(y.get_den_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), y.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), y.get_den_mpz_t());
  return evaluate_v(mpq_class(rn, rd));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = IntPoly(1);
    return *this;
  }
  if (den_.is_one()) {
    IntPoly n = num_ * o.den_;
    n += o.num_;
    num_ = std::move(n);
    den_ = o.den_;
    if (num_.is_zero()) den_ = IntPoly(1);
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    IntPoly n = num_ * o.den_;
    n += o.num_ * den_;
    num_ = std::move(n);
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd work small.
  IntPoly g1 = IntPoly::gcd(num_, o.den_);
  IntPoly g2 = IntPoly::gcd(o.num_, den_);
  IntPoly a = g1.degree() > 0 ? num_.divide_exact(g1) : num_;
  IntPoly d = g1.degree() > 0 ? o.den_.divide_exact(g1) : o.den_;
  IntPoly c = g2.degree() > 0 ? o.num_.divide_exact(g2) : o.num_;
  IntPoly b = g2.degree() > 0 ? den_.divide_exact(g2) : den_;
  num_ = a * c;
  den_ = b * d;
  mpz_class k = num_.content();
  mpz_class kd = den_.content();
  mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), kd.get_mpz_t());
  if (den_.leading() < 0) k = -k;
  if (k != 1) {
    num_ = num_.divide_exact(k);
    den_ = den_.divide_exact(k);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

std::string format_polynomial(const IntPoly& p, std::string_view var, int step) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const mpz_class& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const int e = k / step;
    mpz_class mag = abs(a);
    if (a < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

std::size_t term_count(const IntPoly& p) {
  return static_cast<std::size_t>(std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                [](const mpz_class& x) { return x != 0; }));
}

std::string render(const Scalar& s, std::string_view var, int step) {
  std::string num = format_polynomial(s.numerator(), var, step);
  if (s.denominator().is_one()) return num;
  std::string den = format_polynomial(s.denominator(), var, step);
  if (term_count(s.numerator()) > 1) num = "(" + num + ")";
  const bool den_atom = term_count(s.denominator()) == 1 && den.find('*') == std::string::npos;
  if (!den_atom) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace

std::string Scalar::to_string() const { return is_even() ? render(*this, "q", 2) : render(*this, "v", 1); }

std::string Scalar::to_string_in(std::string_view var) const { return render(*this, var, 1); }

std::string Scalar::to_coefficient_string() const {
  std::string s = to_string();
  if (den_.is_one() && term_count(num_) == 1) return s;
  return "(" + s + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace jhall
