#include "cpdsurf/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <memory>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

namespace {

using Node = std::function<Jet2(const Jet2&)>;

struct Parser {
  const std::string& text;
  const std::string& var;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos) + " in '" + text + "'");
  }

  Node parse_expr() {
    Node lhs = parse_term();
    while (true) {
      if (eat('+')) {
        Node rhs = parse_term();
        lhs = [lhs, rhs](const Jet2& u) { return lhs(u) + rhs(u); };
      } else if (eat('-')) {
        Node rhs = parse_term();
        lhs = [lhs, rhs](const Jet2& u) { return lhs(u) - rhs(u); };
      } else {
        return lhs;
      }
    }
  }

  Node parse_term() {
    Node lhs = parse_factor();
    while (true) {
      if (eat('*')) {
        Node rhs = parse_factor();
        lhs = [lhs, rhs](const Jet2& u) { return lhs(u) * rhs(u); };
      } else if (eat('/')) {
        Node rhs = parse_factor();
        lhs = [lhs, rhs](const Jet2& u) { return lhs(u) / rhs(u); };
      } else {
        return lhs;
      }
    }
  }

  Node parse_factor() {
    Node base = parse_unary();
    if (eat('^')) {
      // Exponent must be a constant expression (no free variable).
      Node expn = parse_factor();
      double p;
      try {
        p = expn(Jet2::constant(std::nan(""))).v;
      } catch (const Error&) {
        error("exponent must be constant");
      }
      if (std::isnan(p)) error("exponent must not contain the free variable");
      return [base, p](const Jet2& u) { return pow(base(u), p); };
    }
    return base;
  }

  Node parse_unary() {
    if (eat('-')) {
      Node n = parse_unary();
      return [n](const Jet2& u) { return -n(u); };
    }
    return parse_primary();
  }

  Node parse_primary() {
    skip();
    if (pos >= text.size()) error("unexpected end of expression");
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double val = std::strtod(text.c_str() + pos, &end);
      if (end == text.c_str() + pos) error("bad number");
      pos = static_cast<size_t>(end - text.c_str());
      return [val](const Jet2&) { return Jet2::constant(val); };
    }
    if (c == '(') {
      ++pos;
      Node inner = parse_expr();
      if (!eat(')')) error("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      const std::string name = text.substr(start, pos - start);
      if (name == var) return [](const Jet2& u) { return u; };
      if (name == "pi") return [](const Jet2&) { return Jet2::constant(M_PI); };
      if (!eat('(')) error("unknown identifier '" + name + "'");
      Node arg = parse_expr();
      if (!eat(')')) error("expected ')'");
      return apply_fn(name, arg);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  Node apply_fn(const std::string& name, Node arg) {
    if (name == "sin") return [arg](const Jet2& u) { return sin(arg(u)); };
    if (name == "cos") return [arg](const Jet2& u) { return cos(arg(u)); };
    if (name == "sinh") return [arg](const Jet2& u) { return sinh(arg(u)); };
    if (name == "cosh") return [arg](const Jet2& u) { return cosh(arg(u)); };
    if (name == "tanh") return [arg](const Jet2& u) { return tanh(arg(u)); };
    if (name == "sqrt") return [arg](const Jet2& u) { return sqrt(arg(u)); };
    if (name == "exp") return [arg](const Jet2& u) { return exp(arg(u)); };
    if (name == "log") return [arg](const Jet2& u) { return log(arg(u)); };
    if (name == "asin") return [arg](const Jet2& u) { return asin(arg(u)); };
    if (name == "asinh") return [arg](const Jet2& u) { return asinh(arg(u)); };
    if (name == "atanh") return [arg](const Jet2& u) { return atanh(arg(u)); };
    if (name == "acot") return [arg](const Jet2& u) { return acot(arg(u)); };
    if (name == "acoth") return [arg](const Jet2& u) { return acoth(arg(u)); };
    error("unknown function '" + name + "'");
  }
};

}  // namespace

ProfileFn parse_profile(const std::string& text, const std::string& var_name) {
  Parser p{text, var_name};
  Node root = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.error("trailing input");
  return {text, [root](const Jet2& u) { return root(u); }};
}

}  // namespace cpdsurf
