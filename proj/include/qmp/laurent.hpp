#pragma once

// Exact scalars: integer Laurent polynomials in s and r, with q := s^2.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmp {

using Integer = boost::multiprecision::cpp_int;

/// Sparse element of Z[s^{+-1}, r^{+-1}].
///
/// Terms are kept sorted by (s exponent, r exponent) ascending and never
/// carry a zero coefficient, so structural equality is ring equality.
class LaurentScalar {
 public:
  struct Term {
    int s = 0;
    int r = 0;
    Integer c;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentScalar() = default;
  LaurentScalar(long long c) {  // NOLINT: integer literals are scalars
    if (c != 0) terms_.push_back({0, 0, Integer(c)});
  }

  static LaurentScalar monomial(Integer c, int s_exp, int r_exp) {
    LaurentScalar x;
    if (c != 0) x.terms_.push_back({s_exp, r_exp, std::move(c)});
    return x;
  }

  /// s^half_exponent, i.e. q^{half_exponent/2}.
  static LaurentScalar q_pow(int half_exponent) { return monomial(1, half_exponent, 0); }
  static LaurentScalar r_pow(int exponent) { return monomial(1, 0, exponent); }

  /// (1 - r^n) / (1 - r) as a Laurent polynomial, for every integer n.
  static LaurentScalar quantum_integer(int n) {
    LaurentScalar x;
    if (n > 0) {
      for (int k = 0; k < n; ++k) x.terms_.push_back({0, k, Integer(1)});
    } else if (n < 0) {
      for (int k = n; k < 0; ++k) x.terms_.push_back({0, k, Integer(-1)});
    }
    return x;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].s == 0 && terms_[0].r == 0 && terms_[0].c == 1; }

  /// Units of the ring are exactly +-s^a r^b.
  bool is_unit() const { return terms_.size() == 1 && abs(terms_[0].c) == 1; }

  LaurentScalar unit_inverse() const {
    if (!is_unit()) throw std::domain_error("scalar is not a unit: " + str());
    return monomial(terms_[0].c, -terms_[0].s, -terms_[0].r);
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].s == 0 && terms_[0].r == 0); }
  bool has_r() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.r != 0; });
  }

  /// Evaluation at r = 1.
  LaurentScalar substitute_r_one() const {
    LaurentScalar x;
    for (const auto& t : terms_) x.add_term(t.s, 0, t.c);
    return x;
  }

  /// Multiply by s^ds r^dr in place.
  LaurentScalar& shift(int ds, int dr) {
    for (auto& t : terms_) {
      t.s += ds;
      t.r += dr;
    }
    return *this;
  }
  LaurentScalar shifted(int ds, int dr) const {
    LaurentScalar x = *this;
    return x.shift(ds, dr);
  }

  LaurentScalar operator-() const {
    LaurentScalar x = *this;
    for (auto& t : x.terms_) t.c = -t.c;
    return x;
  }

  LaurentScalar& operator+=(const LaurentScalar& y) {
    std::vector<Term> out;
    out.reserve(terms_.size() + y.terms_.size());
    auto i = terms_.begin();
    auto j = y.terms_.begin();
    while (i != terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != terms_.end() && key(*i) < key(*j))) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || key(*j) < key(*i)) {
        out.push_back(*j++);
      } else {
        Integer c = i->c + j->c;
        if (c != 0) out.push_back({i->s, i->r, std::move(c)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  LaurentScalar& operator-=(const LaurentScalar& y) { return *this += -y; }

  friend LaurentScalar operator+(LaurentScalar x, const LaurentScalar& y) { return x += y; }
  friend LaurentScalar operator-(LaurentScalar x, const LaurentScalar& y) { return x -= y; }

  friend LaurentScalar operator*(const LaurentScalar& x, const LaurentScalar& y) {
    LaurentScalar z;
    if (x.terms_.size() == 1 && y.terms_.size() == 1) {
      const auto& a = x.terms_[0];
      const auto& b = y.terms_[0];
      return monomial(a.c * b.c, a.s + b.s, a.r + b.r);
    }
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) z.add_term(a.s + b.s, a.r + b.r, a.c * b.c);
    return z;
  }
  LaurentScalar& operator*=(const LaurentScalar& y) { return *this = *this * y; }

  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

  /// Total order used only for canonical sorting of containers.
  friend bool operator<(const LaurentScalar& x, const LaurentScalar& y) {
    return std::lexicographical_compare(
        x.terms_.begin(), x.terms_.end(), y.terms_.begin(), y.terms_.end(), [](const Term& a, const Term& b) {
          if (key(a) != key(b)) return key(a) < key(b);
          return a.c < b.c;
        });
  }

  /// Canonical text: `c*s^a*r^b` terms joined by ` + ` / ` - `, sorted by (a, b).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = t.c < 0;
      Integer mag = negative ? Integer(-t.c) : t.c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      out += term_body(mag, t.s, t.r);
    }
    return out;
  }

  bool single_term() const { return terms_.size() == 1; }

 private:
  static std::pair<int, int> key(const Term& t) { return {t.s, t.r}; }

  static std::string term_body(const Integer& mag, int s_exp, int r_exp) {
    std::string body;
    auto append = [&](const std::string& piece) {
      if (!body.empty()) body += "*";
      body += piece;
    };
    if (mag != 1 || (s_exp == 0 && r_exp == 0)) append(mag.str());
    if (s_exp == 1)
      append("s");
    else if (s_exp != 0)
      append("s^" + std::to_string(s_exp));
    if (r_exp == 1)
      append("r");
    else if (r_exp != 0)
      append("r^" + std::to_string(r_exp));
    return body;
  }

  void add_term(int s_exp, int r_exp, const Integer& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{s_exp, r_exp},
                               [](const Term& t, const std::pair<int, int>& k) { return key(t) < k; });
    if (it != terms_.end() && it->s == s_exp && it->r == r_exp) {
      it->c += c;
      if (it->c == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{s_exp, r_exp, c});
    }
  }

  std::vector<Term> terms_;
};

/// `c*mono` terms joined by ` + `; multi-term coefficients are parenthesised.
/// mono_text returns an empty string for the identity monomial.
template <typename Terms, typename MonoText>
std::string format_terms(const Terms& terms, MonoText mono_text) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string coeff = c.str();
    const bool negative = c.single_term() && c.terms()[0].c < 0;
    if (negative) coeff = (-c).str();
    if (!c.single_term()) coeff = "(" + coeff + ")";
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    const std::string mono = mono_text(m);
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

inline std::string to_string(const LaurentScalar& x) { return x.str(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.str(); }

}  // namespace qmp
