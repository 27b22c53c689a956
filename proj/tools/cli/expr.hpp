#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jhall/partition.hpp"

namespace jhall::cli {

struct Position {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Position pos, const std::string& message, std::string hint = {});

  [[nodiscard]] Position position() const { return pos_; }
  [[nodiscard]] const std::string& hint() const { return hint_; }

 private:
  Position pos_;
  std::string hint_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Integer,  // text holds the decimal digits
    Symbol,   // text is "q" or "v"
    Element,  // text is the basis letter: u, e, p, m or P
    Call,     // text is the function name
    Negate,
    Binary,   // text is the operator: + - * / ^ @
  };

  Kind kind;
  Position pos;
  std::string text;
  Partition h0;
  Partition h1;
  /// u[...] written with a ';', i.e. a root-category object.
  bool shifted_part = false;
  std::vector<ExprPtr> args;
};

/// Parses one expression. Grammar, loosest first:
///   expr   := tensor (('+' | '-') tensor)*
///   tensor := term (('@' | '⊗') term)*
///   term   := unary (('*' | '·' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?
///   atom   := integer | 'q' | 'v' | element | name '(' args ')' | '(' expr ')'
///   element := ('u' | 'e' | 'p' | 'm' | 'P') '[' parts (';' parts)? ']'
/// Only u[...] accepts ';'. Parts are comma-separated positive integers in
/// weakly decreasing order.
ExprPtr parse(const std::string& text);

/// Known function names.
const std::vector<std::string>& function_names();

}  // namespace jhall::cli
