#include "expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace jhall::cli {
namespace {

enum class Tok { Int, Ident, LBracket, RBracket, LParen, RParen, Comma, Semicolon, Plus, Minus, Star, Slash, Caret, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

const std::map<std::string, int>& arities() {
  static const std::map<std::string, int> a{
      {"delta", 1}, {"pair", 2}, {"straighten", 1}, {"natural", 1}, {"psi", 1}, {"psi_inv", 1},
      {"theta", 1}, {"hl", 1},   {"p", 1},          {"e", 1},       {"m", 1},   {"T", 2},
  };
  return a;
}

bool is_element_letter(const std::string& s) { return s == "u" || s == "e" || s == "p" || s == "m" || s == "P"; }

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t k = 0; k < bytes; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    const Position start = pos;
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    if (src.compare(i, 2, "\xC2\xB7") == 0) {
      out.push_back({Tok::Star, "*", start});
      advance(2);
      continue;
    }
    if (src.compare(i, 3, "\xE2\x8A\x97") == 0) {
      out.push_back({Tok::Tensor, "@", start});
      advance(3);
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '@': kind = Tok::Tensor; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) {
      const std::string found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
      throw ParseError(peek().pos, "expected " + what + ", found " + found);
    }
    return take();
  }

  static ExprPtr binary(const std::string& op, Position pos, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->pos = pos;
    e->text = op;
    e->args = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = tensor();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      lhs = binary(op.text, op.pos, lhs, tensor());
    }
    return lhs;
  }

  ExprPtr tensor() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Tensor) {
      const Token& op = take();
      lhs = binary("@", op.pos, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      lhs = binary(op.kind == Tok::Star ? "*" : "/", op.pos, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Negate;
      e->pos = op.pos;
      e->args = {unary()};
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& op = take();
      return binary("^", op.pos, base, unary());
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    switch (t.kind) {
      case Tok::Int:
        take();
        e->kind = Expr::Kind::Integer;
        e->text = t.text;
        return e;
      case Tok::LParen: {
        take();
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier();
      default: {
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "expected an operand, found " + found);
      }
    }
  }

  ExprPtr identifier() {
    const Token& t = take();
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    e->text = t.text;
    if (is_element_letter(t.text) && peek().kind == Tok::LBracket) {
      take();
      e->kind = Expr::Kind::Element;
      e->h0 = parts(t.text);
      if (peek().kind == Tok::Semicolon) {
        if (t.text != "u") throw ParseError(peek().pos, "only u[...] elements take a ';' shifted part");
        take();
        e->shifted_part = true;
        e->h1 = parts(t.text);
      }
      expect(Tok::RBracket, "']'");
      return e;
    }
    if (peek().kind == Tok::LParen) {
      auto it = arities().find(t.text);
      if (it == arities().end()) throw ParseError(t.pos, "unknown function '" + t.text + "'");
      take();
      e->kind = Expr::Kind::Call;
      if (peek().kind != Tok::RParen) {
        e->args.push_back(expr());
        while (accept(Tok::Comma)) e->args.push_back(expr());
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(e->args.size()) != it->second)
        throw ParseError(t.pos, t.text + "() takes " + std::to_string(it->second) + " argument" +
                                    (it->second == 1 ? "" : "s") + ", got " + std::to_string(e->args.size()));
      return e;
    }
    if (t.text == "q" || t.text == "v") {
      e->kind = Expr::Kind::Symbol;
      return e;
    }
    if (is_element_letter(t.text)) throw ParseError(peek().pos, "expected '[' after '" + t.text + "'");
    throw ParseError(t.pos, "unknown name '" + t.text + "'");
  }

  Partition parts(const std::string& letter) {
    std::vector<int> values;
    const Position start = peek().pos;
    if (peek().kind == Tok::Int) {
      do {
        const Token& n = expect(Tok::Int, "a part");
        if (n.text.size() > 6) throw ParseError(n.pos, "part " + n.text + " is too large");
        const int v = std::stoi(n.text);
        if (v == 0) throw ParseError(n.pos, "parts must be positive");
        values.push_back(v);
      } while (accept(Tok::Comma));
    }
    if (!std::is_sorted(values.begin(), values.end(), std::greater<>())) {
      std::vector<int> sorted = values;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      throw ParseError(start, "parts must be weakly decreasing", "write " + letter + "[" + join_parts(sorted) + "]");
    }
    return Partition(values);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

ParseError::ParseError(Position pos, const std::string& message, std::string hint)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      hint_(std::move(hint)) {}

ExprPtr parse(const std::string& text) { return Parser(lex(text)).parse_all(); }

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, a] : arities()) v.push_back(k);
    return v;
  }();
  return names;
}

}  // namespace jhall::cli
