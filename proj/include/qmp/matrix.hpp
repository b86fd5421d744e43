#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qmp/talgebra.hpp"

namespace qmp {

/// 2x2 upper-triangular matrix over Elements; the lower-left entry is zero.
struct UTMatrix {
  Element a11;
  Element a12;
  Element a22;

  Family family() const { return a11.family(); }

  static UTMatrix identity(Family f) { return {Element::one(f), Element::zero(f), Element::one(f)}; }

  UTMatrix scaled(const LaurentScalar& c) const { return {a11.scaled(c), a12.scaled(c), a22.scaled(c)}; }

  friend UTMatrix operator*(const UTMatrix& m, const UTMatrix& n) {
    return {m.a11 * n.a11, m.a11 * n.a12 + m.a12 * n.a22, m.a22 * n.a22};
  }
  UTMatrix& operator*=(const UTMatrix& n) { return *this = *this * n; }

  friend bool operator==(const UTMatrix&, const UTMatrix&) = default;
};

/// U_i = [[alpha_i, beta_i], [0, gamma_i]].
inline UTMatrix generator_matrix(int i, Family f) {
  return {Element::generator(alpha(i), 1, f), Element::generator(beta(i), 1, f), Element::generator(gamma(i), 1, f)};
}

/// (a11^-1, -a11^-1 a12 a22^-1, a22^-1); diagonal entries must be unit monomials.
inline UTMatrix inverse(const UTMatrix& m) {
  Element i11 = inverse(m.a11);
  Element i22 = inverse(m.a22);
  return {i11, -(i11 * m.a12 * i22), i22};
}

/// Iterated product; negative exponents go through the inverse.
inline UTMatrix pow(const UTMatrix& m, int n) {
  if (n < 0) return pow(inverse(m), -n);
  UTMatrix out = UTMatrix::identity(m.family());
  for (int k = 0; k < n; ++k) out *= m;
  return out;
}

/// Quantum integer (1 - r^n)/(1 - r), specialised to n when the family has no r.
inline LaurentScalar family_integer(int n, Family f) {
  auto x = LaurentScalar::quantum_integer(n);
  return has_formal_r(f) ? x : x.substitute_r_one();
}

/// U_i^n in closed form: (alpha_i^n, [n] beta_i gamma_i^{n-1}, gamma_i^n).
inline UTMatrix closed_power(int i, int n, Family f) {
  Element corner = Element::from_blocks({{beta(i), 1}, {gamma(i), n - 1}}, f).scaled(family_integer(n, f));
  return {Element::generator(alpha(i), n, f), corner, Element::generator(gamma(i), n, f)};
}

/// U_1^n U_2^m in closed form:
/// (a1^n a2^m, [m] a1^n b2 g2^{m-1} + [n] b1 g1^{n-1} g2^m, g1^n g2^m).
inline UTMatrix closed_product_entries(int n, int m, Family f) {
  Element a = Element::from_blocks({{Gen::A1, n}, {Gen::A2, m}}, f);
  Element g = Element::from_blocks({{Gen::G1, n}, {Gen::G2, m}}, f);
  Element b = Element::from_blocks({{Gen::A1, n}, {Gen::B2, 1}, {Gen::G2, m - 1}}, f).scaled(family_integer(m, f)) +
              Element::from_blocks({{Gen::B1, 1}, {Gen::G1, n - 1}, {Gen::G2, m}}, f).scaled(family_integer(n, f));
  return {a, b, g};
}

/// The unit scalar c with x == c * base, if one exists. It is read off the
/// (1,1) entries, which must be single monomials, then checked entrywise.
inline std::optional<LaurentScalar> unit_ratio(const UTMatrix& x, const UTMatrix& base) {
  if (!x.a11.is_single_term() || !base.a11.is_single_term()) return std::nullopt;
  const auto& [mx, cx] = *x.a11.terms().begin();
  const auto& [mb, cb] = *base.a11.terms().begin();
  if (mx != mb || !cx.is_unit() || !cb.is_unit()) return std::nullopt;
  LaurentScalar c = cx * cb.unit_inverse();
  if (x != base.scaled(c)) return std::nullopt;
  return c;
}

inline std::string to_string(const UTMatrix& m) {
  return "[[" + to_string(m.a11) + ", " + to_string(m.a12) + "], [0, " + to_string(m.a22) + "]]";
}

inline std::ostream& operator<<(std::ostream& os, const UTMatrix& m) { return os << to_string(m); }

}  // namespace qmp
