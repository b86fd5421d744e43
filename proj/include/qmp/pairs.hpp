#pragma once

// Quantum matrix pairs: relation checks on pairs of triangular matrices and
// the transformations that build new pairs from old ones.

#include <optional>
#include <string>
#include <vector>

#include "qmp/matrix.hpp"
#include "qmp/report.hpp"

namespace qmp {

/// An ordered pair of triangular matrices with its effective parameters:
/// q = s^q_half and, for Type III, internal parameter r^r_power.
struct QPair {
  UTMatrix u1;
  UTMatrix u2;
  Family family = Family::TypeII;
  int q_half = 2;
  int r_power = 1;

  static QPair generators(Family f) { return {generator_matrix(1, f), generator_matrix(2, f), f, 2, 1}; }

  /// Right-hand side of the internal diagonal relation A*C = c (Type I only).
  std::optional<LaurentScalar> central_value() const {
    if (family == Family::TypeI) return LaurentScalar(1);
    return std::nullopt;
  }
  /// p in A*B = p*B*C.
  LaurentScalar nd_parameter() const {
    return has_formal_r(family) ? LaurentScalar::r_pow(r_power) : LaurentScalar(1);
  }

  friend bool operator==(const QPair& x, const QPair& y) { return x.u1 == y.u1 && x.u2 == y.u2; }
};

inline std::string to_string(const QPair& p) { return "(" + to_string(p.u1) + ", " + to_string(p.u2) + ")"; }

/// M*N == s^half_q_exponent * N*M, entry by entry.
inline RelationReport check_q_commutation(const UTMatrix& m, const UTMatrix& n, int half_q_exponent) {
  RelationReport rep{"q-commutation", name(m.family()), {}, {}};
  const UTMatrix lhs = m * n;
  const UTMatrix rhs = (n * m).scaled(LaurentScalar::q_pow(half_q_exponent));
  rep.records.push_back(compare("MN=qNM.11", lhs.a11, rhs.a11));
  rep.records.push_back(compare("MN=qNM.12", lhs.a12, rhs.a12));
  rep.records.push_back(compare("MN=qNM.22", lhs.a22, rhs.a22));
  return rep;
}

/// Internal relations of one matrix [[A, B], [0, C]]:
/// A*C = C*A, A*C = central (when given) and A*B = nd * B*C.
inline RelationReport check_internal(const UTMatrix& m, const std::optional<LaurentScalar>& central,
                                     const LaurentScalar& nd_parameter, const std::string& label = "U") {
  const Family f = m.family();
  RelationReport rep{"internal", name(f), {}, {}};
  const Element ac = m.a11 * m.a22;
  rep.records.push_back(compare(label + ".ID:AC=CA", ac, m.a22 * m.a11));
  if (central) rep.records.push_back(compare(label + ".ID:AC=c", ac, Element::scalar(*central, f)));
  rep.records.push_back(compare(label + ".IND:AB=pBC", m.a11 * m.a12, (m.a12 * m.a22).scaled(nd_parameter)));
  return rep;
}

/// The four mutual diagonal and two mutual non-diagonal relations with
/// parameter s^half_q_exponent.
inline RelationReport check_mutual(const QPair& p, int half_q_exponent) {
  RelationReport rep{"mutual", name(p.family), {}, {}};
  const auto q = LaurentScalar::q_pow(half_q_exponent);
  const auto q_inv = LaurentScalar::q_pow(-half_q_exponent);
  const Element &a1 = p.u1.a11, &b1 = p.u1.a12, &c1 = p.u1.a22;
  const Element &a2 = p.u2.a11, &b2 = p.u2.a12, &c2 = p.u2.a22;
  rep.records.push_back(compare("MD:A1A2=qA2A1", a1 * a2, (a2 * a1).scaled(q)));
  rep.records.push_back(compare("MD:A1C2=q^-1C2A1", a1 * c2, (c2 * a1).scaled(q_inv)));
  rep.records.push_back(compare("MD:A2C1=qC1A2", a2 * c1, (c1 * a2).scaled(q)));
  rep.records.push_back(compare("MD:C1C2=qC2C1", c1 * c2, (c2 * c1).scaled(q)));
  rep.records.push_back(compare("MND:A1B2=qB2C1", a1 * b2, (b2 * c1).scaled(q)));
  rep.records.push_back(compare("MND:B1C2=qA2B1", b1 * c2, (a2 * b1).scaled(q)));
  return rep;
}

/// Every relation a pair of its family must satisfy, at its own parameters.
inline RelationReport check_pair(const QPair& p) {
  RelationReport rep{"pair", name(p.family), {}, {}};
  rep.append(check_q_commutation(p.u1, p.u2, p.q_half));
  rep.append(check_internal(p.u1, p.central_value(), p.nd_parameter(), "U1"));
  rep.append(check_internal(p.u2, p.central_value(), p.nd_parameter(), "U2"));
  rep.append(check_mutual(p, p.q_half));
  return rep;
}

/// (U1^n U2^m, U1^s U2^t) with q -> q^{nt-ms}. Type I attaches the
/// prefactors q^{-nm/2}, q^{-st/2}. Type III admits only (n, 0, 0, n), giving
/// q -> q^{n^2} and r -> r^n.
inline QPair make_product_pair(const QPair& p, int n, int m, int s, int t) {
  if (p.family == Family::TypeIII) {
    if (m != 0 || s != 0 || t != n)
      throw AlgebraError(ErrorKind::UnsupportedTransform, "Type III pairs only transform as (U1^n, U2^n)");
    return {pow(p.u1, n), pow(p.u2, n), p.family, p.q_half * n * n, p.r_power * n};
  }
  QPair out{pow(p.u1, n) * pow(p.u2, m), pow(p.u1, s) * pow(p.u2, t), p.family, p.q_half * (n * t - m * s),
            p.r_power};
  if (p.family == Family::TypeI) {
    if ((p.q_half * n * m) % 2 != 0 || (p.q_half * s * t) % 2 != 0)
      throw AlgebraError(ErrorKind::UnsupportedTransform, "prefactor needs a quarter power of q");
    out.u1 = out.u1.scaled(LaurentScalar::q_pow(-p.q_half * n * m / 2));
    out.u2 = out.u2.scaled(LaurentScalar::q_pow(-p.q_half * s * t / 2));
  }
  return out;
}

/// Scale the corners by unit scalars c1, c2.
inline QPair rescale_pair(const QPair& p, const LaurentScalar& c1, const LaurentScalar& c2) {
  if (!c1.is_unit() || !c2.is_unit())
    throw AlgebraError(ErrorKind::NonUnitScalar, "rescaling constants must be units, got " + c1.str() + ", " + c2.str());
  QPair out = p;
  out.u1.a12 = out.u1.a12.scaled(c1);
  out.u2.a12 = out.u2.a12.scaled(c2);
  return out;
}

/// Internal relations of U1^n U2^m in closed form, checked against the
/// iterated product. Type III is checked on the diagonal n = m only.
inline std::vector<RelationReport> verify_theorem1(Family f, int range) {
  std::vector<RelationReport> out;
  const UTMatrix u1 = generator_matrix(1, f), u2 = generator_matrix(2, f);
  for (int n = -range; n <= range; ++n) {
    for (int m = -range; m <= range; ++m) {
      if (f == Family::TypeIII && m != n) continue;
      RelationReport rep{"theorem1", name(f), {n, m, 0, 0}, {}};
      const UTMatrix closed = closed_product_entries(n, m, f);
      rep.records.push_back(compare("closed-form=U1^nU2^m", closed, pow(u1, n) * pow(u2, m)));
      std::optional<LaurentScalar> central;
      if (f == Family::TypeI) central = LaurentScalar::q_pow(2 * n * m);
      const LaurentScalar nd = has_formal_r(f) ? LaurentScalar::r_pow(n) : LaurentScalar(1);
      rep.append(check_internal(closed, central, nd));
      out.push_back(std::move(rep));
    }
  }
  return out;
}

/// Type III off-diagonal products: A*B = r^k B*C for each candidate k.
/// Every record is a diagnostic whose expected outcome is a violation.
inline std::vector<RelationReport> restrictedness_probe(int n, int m, int k_range) {
  std::vector<RelationReport> out;
  const UTMatrix closed = closed_product_entries(n, m, Family::TypeIII);
  for (int k = -k_range; k <= k_range; ++k) {
    RelationReport rep{"theorem1-probe", name(Family::TypeIII), {n, m, 0, 0}, {}};
    RelationRecord rec = compare("U.IND:AB=r^" + std::to_string(k) + "BC", closed.a11 * closed.a12,
                                 (closed.a12 * closed.a22).scaled(LaurentScalar::r_pow(k)));
    rec.expected_violation = true;
    rep.records.push_back(std::move(rec));
    out.push_back(std::move(rep));
  }
  return out;
}

/// Full pair suite on every admissible product pair with exponents in
/// [-range, range]; Type III runs (n, 0, 0, n) only.
inline std::vector<RelationReport> verify_theorem2(Family f, int range) {
  std::vector<RelationReport> out;
  const QPair base = QPair::generators(f);
  auto run = [&](int n, int m, int s, int t) {
    RelationReport rep{"theorem2", name(f), {n, m, s, t}, {}};
    rep.append(check_pair(make_product_pair(base, n, m, s, t)));
    out.push_back(std::move(rep));
  };
  if (f == Family::TypeIII) {
    for (int n = -range; n <= range; ++n) run(n, 0, 0, n);
    return out;
  }
  for (int n = -range; n <= range; ++n)
    for (int m = -range; m <= range; ++m)
      for (int s = -range; s <= range; ++s)
        for (int t = -range; t <= range; ++t) run(n, m, s, t);
  return out;
}

/// The non-MD1 lines of the mutual diagonal table, derived inside the Type I
/// engine (whose only diagonal rule is a1 a2 = q a2 a1 plus g_i = a_i^-1).
inline RelationReport verify_prop2(int range) {
  const Family f = Family::TypeI;
  RelationReport rep{"prop2", name(f), {range, range, 0, 0}, {}};
  auto g = [f](Gen x, int e) { return Element::generator(x, e, f); };
  for (int n = -range; n <= range; ++n) {
    for (int m = -range; m <= range; ++m) {
      if (n == 0 || m == 0) continue;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      const auto qnm = LaurentScalar::q_pow(2 * n * m);
      const auto qnm_inv = LaurentScalar::q_pow(-2 * n * m);
      rep.records.push_back(compare("a1^n g2^m = q^-nm g2^m a1^n " + tag, g(Gen::A1, n) * g(Gen::G2, m),
                                    (g(Gen::G2, m) * g(Gen::A1, n)).scaled(qnm_inv)));
      rep.records.push_back(compare("a2^n g1^m = q^nm g1^m a2^n " + tag, g(Gen::A2, n) * g(Gen::G1, m),
                                    (g(Gen::G1, m) * g(Gen::A2, n)).scaled(qnm)));
      rep.records.push_back(compare("g1^n g2^m = q^nm g2^m g1^n " + tag, g(Gen::G1, n) * g(Gen::G2, m),
                                    (g(Gen::G2, m) * g(Gen::G1, n)).scaled(qnm)));
    }
  }
  return rep;
}

}  // namespace qmp
