#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "expr.hpp"
#include "jhall/derived.hpp"
#include "jhall/hall.hpp"
#include "jhall/symfunc.hpp"

namespace jhall::cli {

using Value = std::variant<Scalar, HallElem, TensorHallElem, DerivedElem, SymFunc, TensorSymFunc>;

/// Operands of the wrong kind, e.g. pairing a derived element with a
/// symmetric function.
class TypeError : public std::runtime_error {
 public:
  TypeError(Position pos, const std::string& message);
  [[nodiscard]] Position position() const { return pos_; }

 private:
  Position pos_;
};

/// A numeric substitution hits a pole or needs an irrational square root.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string type_name(const Value& v);

class Evaluator {
 public:
  explicit Evaluator(int degree_bound = SymRing::kDefaultDegreeBound) : ring_(degree_bound) {}

  /// Symbolic value of e.
  [[nodiscard]] Value eval(const Expr& e) const;
  [[nodiscard]] const SymRing& ring() const { return ring_; }

 private:
  SymRing ring_;
};

/// Replaces every coefficient by its value at q = x.
Value substitute_q(const Value& v, const mpq_class& x);

/// Parses "3", "-2", "1/2" as a rational. Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

}  // namespace jhall::cli
