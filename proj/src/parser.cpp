#include "germ/parser.hpp"

#include <cctype>

namespace germ {

std::string to_string(const Jet& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + "*" + to_string(m);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int order) : text_(text), order_(order) {}

  Jet parse() {
    if (order_ < 1) throw GermError(ErrorCode::DegreeOverflow, "truncation order must be at least 1");
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (static_cast<unsigned char>(text_[i]) > 127)
        throw ParseError(ErrorCode::SyntaxError, i, "non-ASCII character");
    }
    Jet value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::SyntaxError, pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Jet expr() {
    Jet value = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        value = add(value, term());
      } else if (peek('-')) {
        ++pos_;
        value = sub(value, term());
      } else {
        return value;
      }
    }
  }

  Jet term() {
    Jet value = factor();
    while (peek('*')) {
      ++pos_;
      value = mul_exact(value, factor());
    }
    return value;
  }

  Jet factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    Jet base = atom();
    if (!peek('^')) return base;
    ++pos_;
    if (!at_digit()) fail("expected a natural exponent after '^'");
    std::string e = digits();
    if (e.size() > 4) throw GermError(ErrorCode::DegreeOverflow, "exponent " + e + " is too large");
    int exponent = std::stoi(e);
    Jet out = Jet::constant(Rational(1), order_);
    for (int k = 0; k < exponent; ++k) out = mul_exact(out, base);
    return out;
  }

  Jet atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("implicit multiplication is not supported; use '*'");
      return c == 'x' ? Jet::x(order_) : Jet::y(order_);
    }
    if (c == '(') {
      ++pos_;
      Jet inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Jet rational() {
    Rational value{mpz_class(digits())};
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      if (!at_digit()) fail("expected a positive integer denominator");
      mpz_class den(digits());
      if (den == 0) throw ParseError(ErrorCode::DivisionByZeroLiteral, slash, "zero denominator");
      value = Rational(value.get_num(), den);
      value.canonicalize();
    }
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      fail(text_[pos_] == '.' ? "decimal literals are not supported" :
                                "implicit multiplication is not supported; use '*'");
    return Jet::constant(value, order_);
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

Jet parse_expr(std::string_view text, int order) { return Parser(text, order).parse(); }

}  // namespace germ
