#include "eval.hpp"

#include <utility>

#include "jhall/qcombinatorics.hpp"

namespace jhall::cli {
namespace {

template <class T>
const T* as(const Value& v) {
  return std::get_if<T>(&v);
}

std::string describe(Position pos) { return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": "; }

[[noreturn]] void type_fail(Position pos, const std::string& what, const Value& a, const Value& b) {
  throw TypeError(pos, "cannot " + what + " " + type_name(a) + " and " + type_name(b));
}

DerivedElem to_derived(const Value& v) {
  if (const auto* h = as<HallElem>(v)) return derived::psi_plus(*h);
  if (const auto* d = as<DerivedElem>(v)) return *d;
  if (const auto* s = as<Scalar>(v)) {
    DerivedElem e = derived::natural({}, {});
    e.terms *= *s;
    return e;
  }
  throw std::logic_error("not a derived operand");
}

bool derived_like(const Value& v) { return as<HallElem>(v) || as<DerivedElem>(v); }

// Scalar c as c times the unit of the algebra that `like` lives in.
Value unit_like(const Scalar& c, const Value& like, const SymRing& ring) {
  if (as<HallElem>(like)) return HallElem(Partition{}, c);
  if (const auto* d = as<DerivedElem>(like)) return DerivedElem{LinComb<RootObject>(RootObject{}, c), d->basis};
  if (as<TensorHallElem>(like)) return TensorHallElem(PartitionPair{}, c);
  if (const auto* f = as<SymFunc>(like)) {
    SymFunc one = ring.one(f->basis);
    one.terms *= c;
    return one;
  }
  if (const auto* t = as<TensorSymFunc>(like)) return TensorSymFunc{LinComb<PartitionPair>(PartitionPair{}, c), t->basis};
  return c;
}

Value scale(const Value& v, const Scalar& c) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        T y = x;
        if constexpr (std::is_same_v<T, Scalar>) {
          y *= c;
        } else if constexpr (std::is_same_v<T, HallElem> || std::is_same_v<T, TensorHallElem>) {
          y *= c;
        } else {
          y.terms *= c;
        }
        return y;
      },
      v);
}

Value add(const Value& a, const Value& b, Position pos, const SymRing& ring) {
  if (as<Scalar>(a) && !as<Scalar>(b)) return add(unit_like(std::get<Scalar>(a), b, ring), b, pos, ring);
  if (as<Scalar>(b) && !as<Scalar>(a)) return add(a, unit_like(std::get<Scalar>(b), a, ring), pos, ring);
  if (const auto* x = as<Scalar>(a)) return *x + std::get<Scalar>(b);
  if (as<HallElem>(a) && as<HallElem>(b)) return std::get<HallElem>(a) + std::get<HallElem>(b);
  if (derived_like(a) && derived_like(b)) {
    DerivedElem x = to_derived(a);
    const DerivedElem y = derived::to_basis(to_derived(b), x.basis);
    x.terms += y.terms;
    return x;
  }
  if (as<TensorHallElem>(a) && as<TensorHallElem>(b)) return std::get<TensorHallElem>(a) + std::get<TensorHallElem>(b);
  if (const auto* f = as<SymFunc>(a)) {
    if (const auto* g = as<SymFunc>(b)) {
      SymFunc out = *f;
      out.terms += ring.convert(*g, f->basis).terms;
      return out;
    }
  }
  if (const auto* f = as<TensorSymFunc>(a)) {
    if (const auto* g = as<TensorSymFunc>(b)) {
      TensorSymFunc out = *f;
      out.terms += ring.convert(*g, f->basis).terms;
      return out;
    }
  }
  type_fail(pos, "add", a, b);
}

Value multiply(const Value& a, const Value& b, Position pos, const SymRing& ring) {
  if (const auto* s = as<Scalar>(a)) return scale(b, *s);
  if (const auto* s = as<Scalar>(b)) return scale(a, *s);
  if (as<HallElem>(a) && as<HallElem>(b)) return hall::product(std::get<HallElem>(a), std::get<HallElem>(b));
  if (derived_like(a) && derived_like(b)) {
    const DerivedElem x = to_derived(a);
    return derived::derived_product(x, to_derived(b), x.basis);
  }
  if (as<TensorHallElem>(a) && as<TensorHallElem>(b))
    return hall::tensor_product(std::get<TensorHallElem>(a), std::get<TensorHallElem>(b));
  if (as<SymFunc>(a) && as<SymFunc>(b)) return ring.multiply(std::get<SymFunc>(a), std::get<SymFunc>(b));
  if (as<TensorSymFunc>(a) && as<TensorSymFunc>(b))
    return ring.multiply(std::get<TensorSymFunc>(a), std::get<TensorSymFunc>(b));
  type_fail(pos, "multiply", a, b);
}

Value tensor(const Value& a, const Value& b, Position pos, const SymRing& ring) {
  if (as<HallElem>(a) && as<HallElem>(b)) return hall::tensor(std::get<HallElem>(a), std::get<HallElem>(b));
  if (const auto* f = as<SymFunc>(a)) {
    if (const auto* g = as<SymFunc>(b)) {
      const SymFunc gb = ring.convert(*g, f->basis);
      TensorSymFunc out{{}, f->basis};
      for (const auto& [x, cx] : f->terms)
        for (const auto& [y, cy] : gb.terms) out.terms.add({x, y}, cx * cy);
      return out;
    }
  }
  type_fail(pos, "take the tensor product of", a, b);
}

int small_integer(const Value& v, Position pos, const std::string& what) {
  const auto* s = as<Scalar>(v);
  if (!s || !s->is_constant() || s->denominator() != IntPoly(1))
    throw TypeError(pos, what + " must be an integer, got " + (s ? s->to_string() : type_name(v)));
  const mpz_class n = s->numerator().coefficient(0);
  if (!n.fits_sint_p() || abs(n) > 1000) throw TypeError(pos, what + " is out of range");
  return static_cast<int>(n.get_si());
}

Value power(const Value& base, const Value& exponent, Position pos, const SymRing& ring) {
  const int k = small_integer(exponent, pos, "exponent");
  if (const auto* s = as<Scalar>(base)) {
    if (s->is_zero() && k < 0) throw EvalError(describe(pos) + "zero to a negative power");
    return s->pow(k);
  }
  if (k < 0) throw TypeError(pos, "negative power of " + type_name(base));
  Value acc = unit_like(Scalar(1), base, ring);
  for (int i = 0; i < k; ++i) acc = multiply(acc, base, pos, ring);
  return acc;
}

Scalar parse_integer(const std::string& digits) { return Scalar::rational(mpz_class(digits), 1); }

}  // namespace

TypeError::TypeError(Position pos, const std::string& message) : std::runtime_error(describe(pos) + message), pos_(pos) {}

std::string type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "a scalar";
    case 1: return "a Hall element";
    case 2: return "a Hall tensor";
    case 3: return "a derived element";
    case 4: return "a symmetric function";
    default: return "a symmetric-function tensor";
  }
}

Value Evaluator::eval(const Expr& e) const {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Integer:
      return parse_integer(e.text);
    case K::Symbol:
      return e.text == "q" ? Scalar::q() : Scalar::v();
    case K::Element: {
      if (e.text == "u") {
        if (e.shifted_part) return derived::natural(e.h0, e.h1);
        return hall::basis(e.h0);
      }
      const SymBasis b = e.text == "e"   ? SymBasis::Elementary
                         : e.text == "p" ? SymBasis::Power
                         : e.text == "m" ? SymBasis::Monomial
                                         : SymBasis::HallLittlewood;
      return ring_.basis_element(b, e.h0);
    }
    case K::Negate:
      return scale(eval(*e.args[0]), Scalar(-1));
    case K::Binary: {
      const Value a = eval(*e.args[0]);
      const Value b = eval(*e.args[1]);
      if (e.text == "+") return add(a, b, e.pos, ring_);
      if (e.text == "-") return add(a, scale(b, Scalar(-1)), e.pos, ring_);
      if (e.text == "*") return multiply(a, b, e.pos, ring_);
      if (e.text == "@") return tensor(a, b, e.pos, ring_);
      if (e.text == "^") return power(a, b, e.pos, ring_);
      // division by scalars only
      const auto* s = as<Scalar>(b);
      if (!s) type_fail(e.pos, "divide", a, b);
      if (s->is_zero()) throw EvalError(describe(e.pos) + "division by zero");
      return scale(a, s->inverse());
    }
    case K::Call:
      break;
  }

  const std::string& f = e.text;
  const Value x = eval(*e.args[0]);
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw TypeError(e.pos, f + "() expects " + what + ", got " + type_name(x));
  };
  if (f == "T") {
    const int r = small_integer(x, e.args[0]->pos, "r");
    const int d = small_integer(eval(*e.args[1]), e.args[1]->pos, "d");
    if (r < 1 || d < 1) throw TypeError(e.pos, "T(r, d) needs r >= 1 and d >= 1");
    return ring_.torsion_T(r, d);
  }
  if (f == "pair") {
    const Value y = eval(*e.args[1]);
    if (as<HallElem>(x) && as<HallElem>(y)) return hall::hopf_pairing(std::get<HallElem>(x), std::get<HallElem>(y));
    if (as<TensorHallElem>(x) && as<TensorHallElem>(y))
      return hall::hopf_pairing(std::get<TensorHallElem>(x), std::get<TensorHallElem>(y));
    if (as<SymFunc>(x) && as<SymFunc>(y)) return ring_.power_sum_pairing(std::get<SymFunc>(x), std::get<SymFunc>(y));
    type_fail(e.pos, "pair", x, y);
  }
  if (f == "delta") {
    need(as<HallElem>(x), "a Hall element");
    return hall::coproduct(std::get<HallElem>(x));
  }
  if (f == "straighten" || f == "natural" || f == "theta") {
    need(derived_like(x) || as<Scalar>(x), "a derived element");
    const DerivedElem d = to_derived(x);
    if (f == "straighten") return derived::straighten(d);
    if (f == "natural") return derived::to_natural(d);
    return ring_.theta(d);
  }
  if (f == "psi") {
    need(as<HallElem>(x), "a Hall element");
    return ring_.psi(std::get<HallElem>(x));
  }
  if (f == "psi_inv") {
    need(as<SymFunc>(x), "a symmetric function");
    return ring_.psi_inv(std::get<SymFunc>(x));
  }
  // basis conversions: hl, p, e, m
  const SymBasis target = f == "hl"  ? SymBasis::HallLittlewood
                          : f == "p" ? SymBasis::Power
                          : f == "e" ? SymBasis::Elementary
                                     : SymBasis::Monomial;
  if (const auto* s = as<SymFunc>(x)) return ring_.convert(*s, target);
  if (const auto* t = as<TensorSymFunc>(x)) return ring_.convert(*t, target);
  need(false, "a symmetric function");
  return x;
}

Value substitute_q(const Value& v, const mpq_class& x) {
  auto sub = [&](const Scalar& s) {
    const auto r = s.evaluate_q(x);
    if (!r) throw EvalError("q = " + x.get_str() + " is a pole of " + s.to_string() + " or needs an irrational v");
    return Scalar::from_mpq(*r);
  };
  auto sub_terms = [&](const auto& lc) {
    std::decay_t<decltype(lc)> out;
    for (const auto& [k, c] : lc) out.add(k, sub(c));
    return out;
  };
  return std::visit(
      [&](const auto& y) -> Value {
        using T = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<T, Scalar>) {
          return sub(y);
        } else if constexpr (std::is_same_v<T, HallElem> || std::is_same_v<T, TensorHallElem>) {
          return sub_terms(y);
        } else {
          T out = y;
          out.terms = sub_terms(y.terms);
          return out;
        }
      },
      v);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace jhall::cli
