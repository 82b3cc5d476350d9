#include "germ/parser.hpp"

#include <cctype>

#include "germ/error.hpp"

namespace germ {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> vars, MonomialOrder order)
      : text_(text), vars_(vars), order_(order) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = signed_factor();
    while (accept('*')) acc *= signed_factor();
    skip_space();
    if (!at_end() && (is_name_start(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '(')) {
      fail("implicit multiplication is not allowed; use '*'");
    }
    return acc;
  }

  Polynomial signed_factor() {
    if (accept('-')) return -signed_factor();
    if (accept('+')) return signed_factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (at_end() || !is_digit(text_[pos_])) {
        fail("exponent must be a nonnegative integer");
      }
      const std::size_t start = pos_;
      BigInt e = integer();
      if (!at_end() && (text_[pos_] == '.' || text_[pos_] == '/')) {
        pos_ = start;
        fail("exponent must be a nonnegative integer");
      }
      if (e > 65535) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      BigInt num = integer();
      BigInt den = 1;
      if (!at_end() && text_[pos_] == '.') fail("decimal numbers are not supported; use a/b");
      if (accept('/')) {
        skip_space();
        if (at_end() || !is_digit(text_[pos_])) fail("expected integer denominator");
        const std::size_t den_pos = pos_;
        den = integer();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_.size(), q, order_);
    }
    if (is_name_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_name_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i, order_);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !is_name_start(name.front())) return false;
  for (char c : name) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars,
                            MonomialOrder order) {
  if (vars.size() > kMaxVariables) throw UsageError("too many variables");
  return PolynomialParser(text, vars, order).parse();
}

}  // namespace germ
