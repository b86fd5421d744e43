#pragma once

// Text grammar shared by the command-line tools:
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor ('*' factor)*
//   factor  := primary ['^' ['-'] INT]
//   primary := INT | IDENT | '(' expr ')' | '[' '[' expr ',' expr ']' ',' '[' expr ',' expr ']' ']'
//
// Identifiers: s, q (= s^2) and r, the triangular generators a1 b1 g1 a2 b2 g2
// and matrices U1 U2, or in GL mode the generators a b c d Di a' b' c' d' Di'.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qmp/matrix.hpp"
#include "qmp/mq2.hpp"

namespace qmp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}
  /// 1-based.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

using Value = std::variant<LaurentScalar, Element, UTMatrix, QGElement>;

inline std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

namespace detail {

class Parser {
 public:
  /// No family selects the GL grammar.
  Parser(std::string_view src, std::optional<Family> family) : src_(src), family_(family) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view src_;
  std::optional<Family> family_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw ParseError(msg, (at ? *at : pos_) + 1);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Arithmetic on values --------------------------------------------------

  Element as_element(const Value& v, std::size_t at) const {
    if (auto* c = std::get_if<LaurentScalar>(&v)) return Element::scalar(*c, *family_);
    if (auto* e = std::get_if<Element>(&v)) return *e;
    fail("a matrix cannot appear here", at);
  }
  QGElement as_qg(const Value& v) const {
    if (auto* c = std::get_if<LaurentScalar>(&v)) return QGElement::scalar(*c);
    return std::get<QGElement>(v);
  }
  Value add(const Value& x, const Value& y, std::size_t at) const {
    if (auto* a = std::get_if<LaurentScalar>(&x))
      if (auto* b = std::get_if<LaurentScalar>(&y)) return *a + *b;
    const bool mx = std::holds_alternative<UTMatrix>(x), my = std::holds_alternative<UTMatrix>(y);
    if (mx != my) fail("cannot add a matrix and a non-matrix", at);
    if (mx) {
      const auto &a = std::get<UTMatrix>(x), &b = std::get<UTMatrix>(y);
      return UTMatrix{a.a11 + b.a11, a.a12 + b.a12, a.a22 + b.a22};
    }
    if (!family_) return as_qg(x) + as_qg(y);
    return as_element(x, at) + as_element(y, at);
  }

  Value mul(const Value& x, const Value& y, std::size_t at) const {
    if (auto* a = std::get_if<LaurentScalar>(&x)) {
      if (auto* b = std::get_if<LaurentScalar>(&y)) return *a * *b;
      return std::visit(
          [&](const auto& v) -> Value {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LaurentScalar>) return *a * v;
            else return v.scaled(*a);
          },
          y);
    }
    if (std::holds_alternative<LaurentScalar>(y)) return mul(y, x, at);
    const bool mx = std::holds_alternative<UTMatrix>(x), my = std::holds_alternative<UTMatrix>(y);
    if (mx != my) fail("cannot multiply a matrix by a non-scalar element", at);
    if (mx) return std::get<UTMatrix>(x) * std::get<UTMatrix>(y);
    if (!family_) return as_qg(x) * as_qg(y);
    return as_element(x, at) * as_element(y, at);
  }

  Value power(const Value& v, int n, std::size_t at) const {
    if (auto* c = std::get_if<LaurentScalar>(&v)) {
      LaurentScalar base = *c;
      if (n < 0) {
        if (!base.is_unit()) fail("negative power of a non-unit scalar", at);
        base = base.unit_inverse();
        n = -n;
      }
      LaurentScalar out(1);
      for (int k = 0; k < n; ++k) out *= base;
      return out;
    }
    if (auto* e = std::get_if<Element>(&v)) return pow(*e, n);
    if (auto* m = std::get_if<UTMatrix>(&v)) return pow(*m, n);
    if (n < 0) fail("negative powers are not defined here", at);
    QGElement out = QGElement::one();
    for (int k = 0; k < n; ++k) out *= std::get<QGElement>(v);
    return out;
  }

  // Grammar ---------------------------------------------------------------

  Value expr() {
    Value v = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) v = add(v, term(), at);
      else if (accept('-')) v = add(v, mul(LaurentScalar(-1), term(), at), at);
      else return v;
    }
  }

  Value term() {
    skip_space();
    const std::size_t start = pos_;
    const bool negate = accept('-');
    Value v = factor();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) break;
      v = mul(v, factor(), at);
    }
    return negate ? mul(LaurentScalar(-1), v, start) : v;
  }

  int exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') negative = true, ++pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected an integer exponent");
    long long n = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + (src_[pos_++] - '0');
      if (n > 1000000) fail("exponent out of range", start);
    }
    return static_cast<int>(negative ? -n : n);
  }

  Value factor() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])))) {
      const std::string id = identifier();
      int n = 1;
      if (accept('^')) n = exponent();
      return named(id, n, start);
    }
    Value v = primary();
    if (accept('^')) v = power(v, exponent(), start);
    return v;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    while (pos_ < src_.size() && src_[pos_] == '\'') ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Value named(const std::string& id, int n, std::size_t at) {
    if (id == "s") return LaurentScalar::q_pow(n);
    if (id == "q") return LaurentScalar::q_pow(2 * n);
    if (family_) {
      if (id == "r") return LaurentScalar::r_pow(n);
      static const std::pair<const char*, Gen> gens[] = {{"a1", Gen::A1}, {"a2", Gen::A2}, {"b1", Gen::B1},
                                                         {"b2", Gen::B2}, {"g1", Gen::G1}, {"g2", Gen::G2}};
      for (const auto& [text, g] : gens)
        if (id == text) return Element::generator(g, n, *family_);
      if (id == "U1" || id == "U2") return pow(generator_matrix(id == "U1" ? 1 : 2, *family_), n);
    } else {
      for (int k = 0; k < 10; ++k) {
        const auto g = static_cast<QGen>(k % 5);
        if (id == name(g, k >= 5)) {
          if (n < 0) fail("negative powers are not defined here", at);
          return QGElement::generator(g, k >= 5, n);
        }
      }
    }
    fail("unknown identifier '" + id + "'", at);
  }

  Value primary() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return LaurentScalar::monomial(Integer(std::string(src_.substr(start, pos_ - start))), 0, 0);
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (c == '[') return matrix_literal();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value matrix_literal() {
    if (!family_) fail("matrix literals need a triangular family");
    expect('[');
    expect('[');
    auto entry = [this](std::size_t& at) {
      skip_space();
      at = pos_;
      return as_element(expr(), at);
    };
    std::size_t at = 0;
    const Element a11 = entry(at);
    expect(',');
    const Element a12 = entry(at);
    expect(']');
    expect(',');
    expect('[');
    if (!entry(at).is_zero()) fail("lower-left entry must be 0", at);
    expect(',');
    const Element a22 = entry(at);
    expect(']');
    expect(']');
    return UTMatrix{a11, a12, a22};
  }
};

}  // namespace detail

/// Parse and evaluate; no family selects the GL grammar.
inline Value parse_expression(std::string_view src, std::optional<Family> family) {
  return detail::Parser(src, family).parse();
}

inline Element parse_element(std::string_view src, Family f) {
  Value v = parse_expression(src, f);
  if (auto* c = std::get_if<LaurentScalar>(&v)) return Element::scalar(*c, f);
  if (auto* e = std::get_if<Element>(&v)) return *e;
  throw ParseError("expected an element, got a matrix", 1);
}

}  // namespace qmp
