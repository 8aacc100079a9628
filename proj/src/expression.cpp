#include "biratio/expression.hpp"

#include <algorithm>
#include <cctype>

#include "biratio/quad_ext.hpp"

namespace biratio {

namespace {

constexpr std::size_t kMaxInput = 1 << 20;

using Poly = BiPoly<Rational>;

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::Parse, what + " at column " + std::to_string(pos + 1));
}

ExprPtr node(Expr::Kind k, std::size_t pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->position = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr expression() {
    ExprPtr lhs = term();
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = i_++;
      lhs = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, at, {lhs, term()});
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(i_, std::string("expected '") + c + "'" + found());
    ++i_;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail(i_, "unexpected trailing input" + found());
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

 private:
  std::string found() const {
    if (i_ >= s_.size()) return ", found end of input";
    return std::string(", found '") + s_[i_] + "'";
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip();
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      std::size_t at = i_++;
      lhs = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, at, {lhs, unary()});
    }
  }

  ExprPtr unary() {
    skip();
    char c = peek();
    if (c == '-' || c == '+') {
      std::size_t at = i_++;
      ExprPtr inner = unary();
      return c == '-' ? node(Expr::Kind::Neg, at, {inner}) : inner;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip();
    if (peek() != '^') return base;
    std::size_t at = i_++;
    unsigned e = exponent_chain();
    auto p = node(Expr::Kind::Pow, at, {base});
    std::const_pointer_cast<Expr>(p)->exponent = e;
    return p;
  }

  // a^b^c = a^(b^c); exponents are literal nonnegative integers.
  unsigned exponent_chain() {
    skip();
    std::size_t at = i_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(at, "exponent must be a nonnegative integer literal" + found());
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 100000) fail(at, "exponent too large");
    }
    skip();
    if (peek() == '^') {
      ++i_;
      unsigned rest = exponent_chain();
      unsigned long long acc = 1;
      for (unsigned k = 0; k < rest; ++k) {
        acc *= v;
        if (acc > 100000) fail(at, "exponent too large");
      }
      v = acc;
    }
    return static_cast<unsigned>(v);
  }

  ExprPtr atom() {
    skip();
    std::size_t at = i_;
    char c = peek();
    if (c == '(') {
      ++i_;
      ExprPtr inner = expression();
      expect(')');
      return inner;
    }
    if (c == 'x' || c == 'y') {
      ++i_;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        fail(at, "unknown identifier; only x and y are variables");
      return node(c == 'x' ? Expr::Kind::X : Expr::Kind::Y, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++i_;
      auto e = node(Expr::Kind::Number, at);
      try {
        std::const_pointer_cast<Expr>(e)->value = parse_rational(s_.substr(start, i_ - start));
      } catch (const Error&) {
        fail(at, "malformed number");
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      fail(at, "unknown identifier; only x and y are variables and coefficients must be rational");
    fail(at, "expected a number, x, y or '('" + found());
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

RationalFunction reduce(RationalFunction f) {
  if (f.num.zero()) return {Poly(), Poly(Rational(1))};
  if (f.den.total_degree() > 0) {
    Poly g = gcd(f.num, f.den);
    if (g.total_degree() > 0) {
      f.num = divexact(f.num, g);
      f.den = divexact(f.den, g);
    }
  }
  return f;
}

RationalFunction eval(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return {Poly(e.value), Poly(Rational(1))};
    case K::X: return {Poly::x(), Poly(Rational(1))};
    case K::Y: return {Poly::y(), Poly(Rational(1))};
    case K::Neg: {
      auto a = eval(*e.args[0]);
      return {-a.num, a.den};
    }
    case K::Pow: {
      auto a = eval(*e.args[0]);
      return {pow(a.num, e.exponent), pow(a.den, e.exponent)};
    }
    default: break;
  }
  auto a = eval(*e.args[0]), b = eval(*e.args[1]);
  switch (e.kind) {
    case K::Add: return reduce({a.num * b.den + b.num * a.den, a.den * b.den});
    case K::Sub: return reduce({a.num * b.den - b.num * a.den, a.den * b.den});
    case K::Mul: return reduce({a.num * b.num, a.den * b.den});
    case K::Div:
      if (b.num.zero())
        throw Error(ErrorKind::ZeroDenominator, "division by zero at column " + std::to_string(e.position + 1));
      return reduce({a.num * b.den, a.den * b.num});
    default: break;
  }
  throw Error(ErrorKind::Parse, "unknown expression node");
}

Rational eval_at(const Expr& e, const Rational& x, const Rational& y) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return e.value;
    case K::X: return x;
    case K::Y: return y;
    case K::Neg: return -eval_at(*e.args[0], x, y);
    case K::Pow: {
      Rational b = eval_at(*e.args[0], x, y), acc = 1;
      for (unsigned k = 0; k < e.exponent; ++k) acc *= b;
      return acc;
    }
    default: break;
  }
  Rational a = eval_at(*e.args[0], x, y), b = eval_at(*e.args[1], x, y);
  switch (e.kind) {
    case K::Add: return a + b;
    case K::Sub: return a - b;
    case K::Mul: return a * b;
    case K::Div:
      if (b == 0) throw Error(ErrorKind::ZeroDenominator, "division by zero at column " + std::to_string(e.position + 1));
      return a / b;
    default: break;
  }
  throw Error(ErrorKind::Parse, "unknown expression node");
}

// Parsed literals have denominators 2^a 5^b and print back as decimals.
std::string print_number(const Rational& q) {
  Integer den = q.get_den();
  unsigned twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t());
  unsigned fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t());
  std::string s = den == 1 ? to_decimal(q, std::max(twos, fives)) : to_string(q);
  return sgn(q) < 0 || den != 1 ? "(" + s + ")" : s;
}

int precedence(Expr::Kind k) {
  using K = Expr::Kind;
  switch (k) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul:
    case K::Div: return 2;
    case K::Neg: return 3;
    case K::Pow: return 4;
    default: return 5;
  }
}

std::string print(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& child, bool paren) {
    std::string s = print(child);
    return paren ? "(" + s + ")" : s;
  };
  int p = precedence(e.kind);
  switch (e.kind) {
    case K::Number: return print_number(e.value);
    case K::X: return "x";
    case K::Y: return "y";
    case K::Neg: return "-" + wrap(*e.args[0], precedence(e.args[0]->kind) < p);
    case K::Pow: return wrap(*e.args[0], precedence(e.args[0]->kind) <= p) + "^" + std::to_string(e.exponent);
    default: break;
  }
  const char* op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : e.kind == K::Mul ? "*" : "/";
  // Left operands bind at equal precedence; right operands need parentheses.
  return wrap(*e.args[0], precedence(e.args[0]->kind) < p) + op + wrap(*e.args[1], precedence(e.args[1]->kind) <= p);
}

void check_size(std::string_view text) {
  if (text.size() > kMaxInput) throw Error(ErrorKind::Parse, "input larger than 1 MB");
}

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  check_size(text);
  Parser p(text);
  ExprPtr e = p.expression();
  p.finish();
  return e;
}

RationalFunction evaluate(const ExprPtr& e) { return eval(*e); }

Rational evaluate_at(const ExprPtr& e, const Rational& x, const Rational& y) { return eval_at(*e, x, y); }

std::pair<ExprPtr, ExprPtr> parse_map_expressions(std::string_view text) {
  check_size(text);
  Parser p(text);
  p.expect('(');
  ExprPtr first = p.expression();
  p.expect(',');
  ExprPtr second = p.expression();
  p.expect(')');
  p.finish();
  return {first, second};
}

SurfaceMap parse_map(std::string_view text) {
  auto [a, b] = parse_map_expressions(text);
  RationalFunction f = evaluate(a), g = evaluate(b);
  return SurfaceMap(bihomogenize(f.num, f.den), bihomogenize(g.num, g.den));
}

std::string to_string(const ExprPtr& e) { return print(*e); }

}  // namespace biratio
