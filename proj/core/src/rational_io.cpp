#include "alia/rational_io.hpp"

#include <cctype>

#include "alia/errors.hpp"

namespace alia {

namespace {

struct Token {
  enum Kind { Int, Z, Zeta, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;   // for Int
  long zeta_order{};  // for Zeta
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, "", 0};
      return;
    }
    char c = s_[pos_];
    switch (c) {
      case '+': tok_ = {Token::Plus, "+", 0}; ++pos_; return;
      case '-': tok_ = {Token::Minus, "-", 0}; ++pos_; return;
      case '*': tok_ = {Token::Star, "*", 0}; ++pos_; return;
      case '/': tok_ = {Token::Slash, "/", 0}; ++pos_; return;
      case '^': tok_ = {Token::Caret, "^", 0}; ++pos_; return;
      case '(': tok_ = {Token::LParen, "(", 0}; ++pos_; return;
      case ')': tok_ = {Token::RParen, ")", 0}; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Token::Int, s_.substr(start, pos_ - start), 0};
      return;
    }
    if (s_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ConfigError("parse: 'zeta' must be followed by its order");
      tok_ = {Token::Zeta, "", std::stol(s_.substr(start, pos_ - start))};
      if (tok_.zeta_order < 1) throw ConfigError("parse: zeta order must be positive");
      return;
    }
    if (c == 'z') {
      ++pos_;
      tok_ = {Token::Z, "z", 0};
      return;
    }
    throw ConfigError(std::string("parse: unexpected character '") + c + "' at position " +
                      std::to_string(pos_));
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;
};

// value during evaluation: rational function num/den over a fixed order
struct Val {
  Poly num, den;
};

class Parser {
public:
  Parser(const std::string& text, long order, bool allow_z)
      : lex_(text), order_(order), allow_z_(allow_z) {}

  Val parse() {
    Val v = expr();
    if (lex_.peek().kind != Token::End) throw ConfigError("parse: trailing input");
    return v;
  }

private:
  Val expr() {
    Val acc = term();
    while (true) {
      if (lex_.peek().kind == Token::Plus) {
        lex_.next();
        acc = add(acc, term());
      } else if (lex_.peek().kind == Token::Minus) {
        lex_.next();
        acc = sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Val term() {
    Val acc = factor();
    while (true) {
      if (lex_.peek().kind == Token::Star) {
        lex_.next();
        acc = mul(acc, factor());
      } else if (lex_.peek().kind == Token::Slash) {
        lex_.next();
        acc = div(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Val factor() {
    Val b = base();
    if (lex_.peek().kind == Token::Caret) {
      lex_.next();
      bool neg = false;
      if (lex_.peek().kind == Token::Minus) {
        lex_.next();
        neg = true;
      }
      Token t = lex_.next();
      if (t.kind != Token::Int) throw ConfigError("parse: exponent must be an integer");
      long e = std::stol(t.text);
      Val acc = one();
      for (long i = 0; i < e; ++i) acc = mul(acc, b);
      if (neg) acc = div(one(), acc);
      return acc;
    }
    return b;
  }

  Val base() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Int: {
        Rational q(t.text);
        return {Poly::constant(CycScalar::rational(q, order_)), unit_poly()};
      }
      case Token::Zeta: {
        if (order_ % t.zeta_order != 0)
          throw ConfigError("parse: zeta literal outside session field");
        return {Poly::constant(CycScalar::zeta(t.zeta_order).embed(order_)), unit_poly()};
      }
      case Token::Z:
        if (!allow_z_) throw ConfigError("parse: 'z' not allowed in a scalar expression");
        return {Poly::z(order_), unit_poly()};
      case Token::Minus:
        return neg(factor());
      case Token::LParen: {
        Val v = expr();
        if (lex_.next().kind != Token::RParen) throw ConfigError("parse: missing ')'");
        return v;
      }
      default:
        throw ConfigError("parse: unexpected token");
    }
  }

  Poly unit_poly() const { return Poly::constant(CycScalar::one(order_)); }
  Val one() const { return {unit_poly(), unit_poly()}; }
  Val add(const Val& a, const Val& b) const {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  Val sub(const Val& a, const Val& b) const {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  Val mul(const Val& a, const Val& b) const { return {a.num * b.num, a.den * b.den}; }
  Val div(const Val& a, const Val& b) const {
    if (b.num.is_zero()) throw ConfigError("parse: division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  Val neg(const Val& a) const { return {-a.num, a.den}; }

  Lexer lex_;
  long order_;
  bool allow_z_;
};

long scan_order(const std::string& text, long min_order) {
  long order = min_order;
  Lexer lex(text);
  while (lex.peek().kind != Token::End) {
    Token t = lex.next();
    if (t.kind == Token::Zeta) order = lcm_long(order, t.zeta_order);
  }
  return order;
}

}  // namespace

CycScalar parse_scalar(const std::string& text, long min_order) {
  long order = scan_order(text, min_order);
  Parser p(text, order, /*allow_z=*/false);
  Val v = p.parse();
  internal_check(v.num.degree() == 0 && v.den.degree() == 0, "parse_scalar: nonconstant value");
  if (v.den.coeff(0).is_zero()) throw ConfigError("parse_scalar: division by zero");
  return v.num.coeff(0) / v.den.coeff(0);
}

RationalFunction parse_rational(const std::string& text, std::vector<SpherePoint> pole_set,
                                long min_order) {
  long order = scan_order(text, min_order);
  for (const auto& p : pole_set)
    if (!p.is_infinity()) order = lcm_long(order, p.value().order());
  Parser p(text, order, /*allow_z=*/true);
  Val v = p.parse();
  std::vector<SpherePoint> poles;
  for (const auto& q : pole_set) poles.push_back(q.embed(order));
  return RationalFunction::make(v.num, v.den, std::move(poles));
}

SpherePoint parse_point(const std::string& text, long min_order) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "infinity" || t == "oo") return SpherePoint::infinity();
  return SpherePoint::finite(parse_scalar(text, min_order));
}

}  // namespace alia
