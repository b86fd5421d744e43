#pragma once

// Quantum matrix algebra M_q(2) and GL_q(2): generators a, b, c, d with
//   ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb, ad - da = (q - q^-1) bc,
// a central formal inverse Di of the quantum determinant ad - q bc, and an
// optional primed copy commuting with the unprimed one.
//
// Normal form: a^i b^j c^k d^l Di^m times the primed analogue, with
// i*l*m == 0 in each block (a d Di is absorbed into 1 + q bc Di).

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qmp/laurent.hpp"
#include "qmp/report.hpp"

namespace qmp {

enum class QGen : std::uint8_t { A, B, C, D, Di };

inline const char* name(QGen g, bool primed = false) {
  static const char* plain[] = {"a", "b", "c", "d", "Di"};
  static const char* prime[] = {"a'", "b'", "c'", "d'", "Di'"};
  return (primed ? prime : plain)[static_cast<int>(g)];
}

struct PBWMonomial {
  std::array<int, 10> e{};  // a b c d Di, then a' b' c' d' Di'

  bool is_identity() const { return e == std::array<int, 10>{}; }
  int degree() const {
    int n = 0;
    for (int k : e) n += k;
    return n;
  }

  /// Graded order: lower total degree first, then larger exponents of earlier letters.
  friend std::strong_ordering operator<=>(const PBWMonomial& x, const PBWMonomial& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    return y.e <=> x.e;
  }
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

inline std::string to_string(const PBWMonomial& m) {
  std::string out;
  for (int k = 0; k < 10; ++k) {
    if (m.e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += name(static_cast<QGen>(k % 5), k >= 5);
    if (m.e[k] != 1) out += "^" + std::to_string(m.e[k]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

using Block5 = std::array<int, 5>;
using BlockPoly = std::map<Block5, LaurentScalar>;

inline void add_to(BlockPoly& p, const Block5& m, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// d^l a = a d^l - kappa_l bc d^{l-1} with kappa_l = (q - q^-1) sum_{t<l} q^{-2t}.
inline LaurentScalar kappa(int l) {
  LaurentScalar sum;
  for (int t = 0; t < l; ++t) sum += LaurentScalar::q_pow(-4 * t);
  return (LaurentScalar::q_pow(2) - LaurentScalar::q_pow(-2)) * sum;
}

// Normal-form monomial times one generator on the right (absorption not applied).
inline void mul_right(BlockPoly& out, const Block5& x, const LaurentScalar& c, QGen g) {
  const auto [i, j, k, l, m] = x;
  switch (g) {
    case QGen::D: add_to(out, {i, j, k, l + 1, m}, c); break;
    case QGen::C: add_to(out, {i, j, k + 1, l, m}, c.shifted(-2 * l, 0)); break;
    case QGen::B: add_to(out, {i, j + 1, k, l, m}, c.shifted(-2 * l, 0)); break;
    case QGen::A:
      add_to(out, {i + 1, j, k, l, m}, c.shifted(-2 * (j + k), 0));
      if (l > 0) add_to(out, {i, j + 1, k + 1, l - 1, m}, -(c * kappa(l)));
      break;
    case QGen::Di: add_to(out, {i, j, k, l, m + 1}, c); break;
  }
}

// a^i b^j c^k d^l Di^m with i, l, m >= 1
//   -> q^{j+k} a^{i-1} b^j c^k d^{l-1} Di^{m-1} + q^{j+k+1} a^{i-1} b^{j+1} c^{k+1} d^{l-1} Di^m.
inline BlockPoly absorb(const BlockPoly& p) {
  BlockPoly out;
  std::vector<std::pair<Block5, LaurentScalar>> work(p.begin(), p.end());
  while (!work.empty()) {
    auto [x, c] = std::move(work.back());
    work.pop_back();
    const auto [i, j, k, l, m] = x;
    if (i >= 1 && l >= 1 && m >= 1) {
      work.push_back({{i - 1, j, k, l - 1, m - 1}, c.shifted(2 * (j + k), 0)});
      work.push_back({{i - 1, j + 1, k + 1, l - 1, m}, c.shifted(2 * (j + k + 1), 0)});
    } else {
      add_to(out, x, c);
    }
  }
  return out;
}

inline BlockPoly block_product(const Block5& x, const Block5& y) {
  BlockPoly cur{{x, LaurentScalar(1)}};
  auto apply = [&cur](QGen g, int times) {
    for (int t = 0; t < times; ++t) {
      BlockPoly next;
      for (const auto& [mono, c] : cur) mul_right(next, mono, c, g);
      cur = std::move(next);
    }
  };
  apply(QGen::A, y[0]);
  apply(QGen::B, y[1]);
  apply(QGen::C, y[2]);
  apply(QGen::D, y[3]);
  apply(QGen::Di, y[4]);
  return absorb(cur);
}

inline Block5 block(const PBWMonomial& m, int half) {
  return {m.e[5 * half], m.e[5 * half + 1], m.e[5 * half + 2], m.e[5 * half + 3], m.e[5 * half + 4]};
}

}  // namespace detail

/// Linear combination of PBW monomials with Laurent coefficients in s.
class QGElement {
 public:
  using Terms = std::map<PBWMonomial, LaurentScalar>;

  static QGElement zero() { return {}; }
  static QGElement scalar(const LaurentScalar& c) {
    QGElement x;
    x.add_term(PBWMonomial{}, c);
    return x;
  }
  static QGElement one() { return scalar(1); }
  static QGElement generator(QGen g, bool primed = false, int exponent = 1) {
    QGElement out = one();
    PBWMonomial m;
    m.e[static_cast<int>(g) + (primed ? 5 : 0)] = 1;
    QGElement x;
    x.add_term(m, 1);
    for (int k = 0; k < exponent; ++k) out = out * x;
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PBWMonomial& m, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QGElement scaled(const LaurentScalar& c) const {
    QGElement x;
    if (c.is_zero()) return x;
    for (const auto& [m, k] : terms_) x.terms_.emplace(m, k * c);
    return x;
  }
  QGElement operator-() const { return scaled(-1); }

  QGElement& operator+=(const QGElement& y) {
    for (const auto& [m, c] : y.terms_) add_term(m, c);
    return *this;
  }
  QGElement& operator-=(const QGElement& y) { return *this += -y; }
  friend QGElement operator+(QGElement x, const QGElement& y) { return x += y; }
  friend QGElement operator-(QGElement x, const QGElement& y) { return x -= y; }

  friend QGElement operator*(const QGElement& x, const QGElement& y) {
    QGElement z;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        const auto lo = detail::block_product(detail::block(mx, 0), detail::block(my, 0));
        const auto hi = detail::block_product(detail::block(mx, 1), detail::block(my, 1));
        const LaurentScalar c = cx * cy;
        for (const auto& [bl, cl] : lo) {
          for (const auto& [bh, ch] : hi) {
            PBWMonomial m;
            for (int k = 0; k < 5; ++k) m.e[k] = bl[k], m.e[5 + k] = bh[k];
            z.add_term(m, c * cl * ch);
          }
        }
      }
    }
    return z;
  }
  QGElement& operator*=(const QGElement& y) { return *this = *this * y; }

  friend bool operator==(const QGElement&, const QGElement&) = default;

 private:
  Terms terms_;
};

inline std::string to_string(const QGElement& x) {
  return format_terms(x.terms(), [](const PBWMonomial& m) { return m.is_identity() ? std::string() : to_string(m); });
}
inline std::ostream& operator<<(std::ostream& os, const QGElement& x) { return os << to_string(x); }

/// Normal form of a word in a, b, c, d (letters 0..3), reduced by adjacent
/// rewriting of out-of-order pairs at the leftmost or rightmost position.
/// Independent of the bulk kernel; used to cross-check it.
enum class RewriteStrategy { Leftmost, Rightmost };

inline QGElement rewrite_word(const std::vector<int>& word, RewriteStrategy strategy) {
  using Word = std::vector<int>;
  std::map<Word, LaurentScalar> todo{{word, LaurentScalar(1)}};
  QGElement out;
  const LaurentScalar q_inv = LaurentScalar::q_pow(-2);
  const LaurentScalar q_diff = LaurentScalar::q_pow(2) - q_inv;
  auto push = [&todo](const Word& w, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = todo.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) todo.erase(it);
    }
  };
  while (!todo.empty()) {
    auto node = todo.extract(todo.begin());
    const Word w = node.key();
    const LaurentScalar c = node.mapped();
    std::ptrdiff_t pos = -1;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        pos = static_cast<std::ptrdiff_t>(p);
        if (strategy == RewriteStrategy::Leftmost) break;
      }
    }
    if (pos < 0) {
      PBWMonomial m;
      for (int g : w) ++m.e[g];
      out.add_term(m, c);
      continue;
    }
    const int x = w[pos], y = w[pos + 1];  // x > y
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    if (x == 3 && y == 0) {  // da -> ad - (q - q^-1) bc
      push(swapped, c);
      Word bc = w;
      bc[pos] = 1;
      bc[pos + 1] = 2;
      push(bc, -(c * q_diff));
    } else if (x == 2 && y == 1) {  // cb -> bc
      push(swapped, c);
    } else {  // ba, ca, db, dc -> q^-1 (swapped)
      push(swapped, c * q_inv);
    }
  }
  return out;
}

struct FullMatrix {
  QGElement m11, m12, m21, m22;

  static FullMatrix identity() { return {QGElement::one(), {}, {}, QGElement::one()}; }

  friend FullMatrix operator*(const FullMatrix& x, const FullMatrix& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22, x.m21 * y.m11 + x.m22 * y.m21,
            x.m21 * y.m12 + x.m22 * y.m22};
  }
  friend bool operator==(const FullMatrix&, const FullMatrix&) = default;
};

inline FullMatrix fm_mul(const FullMatrix& x, const FullMatrix& y) { return x * y; }

inline std::string to_string(const FullMatrix& m) {
  return "[[" + to_string(m.m11) + ", " + to_string(m.m12) + "], [" + to_string(m.m21) + ", " + to_string(m.m22) +
         "]]";
}
inline std::ostream& operator<<(std::ostream& os, const FullMatrix& m) { return os << to_string(m); }

/// U = [[a, b], [c, d]] (or its primed copy).
inline FullMatrix generator_matrix_q(bool primed = false) {
  return {QGElement::generator(QGen::A, primed), QGElement::generator(QGen::B, primed),
          QGElement::generator(QGen::C, primed), QGElement::generator(QGen::D, primed)};
}

/// M11 M22 - q^{half_q_exponent/2} M12 M21.
inline QGElement quantum_determinant(const FullMatrix& m, int half_q_exponent = 2) {
  return m.m11 * m.m22 - (m.m12 * m.m21).scaled(LaurentScalar::q_pow(half_q_exponent));
}

/// U^-1 = Di [[d, -q^-1 b], [-q c, a]].
inline FullMatrix qg_inverse_matrix(bool primed = false) {
  const QGElement di = QGElement::generator(QGen::Di, primed);
  const FullMatrix u = generator_matrix_q(primed);
  return {di * u.m22, (di * u.m12).scaled(LaurentScalar::q_pow(-2)).scaled(-1),
          (di * u.m21).scaled(LaurentScalar::q_pow(2)).scaled(-1), di * u.m11};
}

/// Iterated product; negative powers use the given inverse.
inline FullMatrix fm_pow(const FullMatrix& m, const FullMatrix& m_inverse, int n) {
  const FullMatrix& base = n < 0 ? m_inverse : m;
  FullMatrix out = FullMatrix::identity();
  for (int k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
  return out;
}

/// U^n for the generator matrix (or its primed copy).
inline FullMatrix fm_pow(int n, bool primed = false) {
  return fm_pow(generator_matrix_q(primed), qg_inverse_matrix(primed), n);
}

/// The six defining relations among the entries of M with q -> s^half_q_exponent.
inline RelationReport check_R(const FullMatrix& mat, int half_q_exponent) {
  RelationReport rep{"R", "GL", {}, {}};
  const auto q = LaurentScalar::q_pow(half_q_exponent);
  const auto q_diff = q - LaurentScalar::q_pow(-half_q_exponent);
  const QGElement &a = mat.m11, &b = mat.m12, &c = mat.m21, &d = mat.m22;
  rep.records.push_back(compare("ab=qba", a * b, (b * a).scaled(q)));
  rep.records.push_back(compare("ac=qca", a * c, (c * a).scaled(q)));
  rep.records.push_back(compare("bc=cb", b * c, c * b));
  rep.records.push_back(compare("bd=qdb", b * d, (d * b).scaled(q)));
  rep.records.push_back(compare("cd=qdc", c * d, (d * c).scaled(q)));
  rep.records.push_back(compare("ad-da=(q-q^-1)bc", a * d - d * a, (b * c).scaled(q_diff)));
  return rep;
}

/// Results on powers: U^n satisfies the relations with q^n (n >= 1 and n <= -1),
/// as does U^n U'^n; the quantum determinant is central and U U^-1 = I.
inline std::vector<RelationReport> verify_results(int n_range) {
  std::vector<RelationReport> out;
  for (int n = -n_range; n <= n_range; ++n) {
    if (n == 0) continue;
    const FullMatrix un = fm_pow(n);
    RelationReport rep{n > 0 ? "mq2-result1" : "mq2-result2", "GL", {n, 0, 0, 0}, {}};
    rep.append(check_R(un, 2 * n));
    rep.records.push_back(compare("U^nU^-n=I", un * fm_pow(-n), FullMatrix::identity()));
    out.push_back(std::move(rep));
    RelationReport primed{"mq2-result3", "GL", {n, 0, 0, 0}, {}};
    primed.append(check_R(un * fm_pow(n, true), 2 * n));
    out.push_back(std::move(primed));
  }
  RelationReport central{"mq2-central", "GL", {}, {}};
  const QGElement dq = quantum_determinant(generator_matrix_q());
  for (QGen g : {QGen::A, QGen::B, QGen::C, QGen::D}) {
    const QGElement x = QGElement::generator(g);
    central.records.push_back(compare(std::string("D_q") + name(g) + "=" + name(g) + "D_q", dq * x, x * dq));
  }
  central.records.push_back(
      compare("D_q*Di=1", dq * QGElement::generator(QGen::Di), QGElement::one()));
  central.records.push_back(compare("UU^-1=I", generator_matrix_q() * qg_inverse_matrix(), FullMatrix::identity()));
  central.records.push_back(compare("U^-1U=I", qg_inverse_matrix() * generator_matrix_q(), FullMatrix::identity()));
  out.push_back(std::move(central));
  return out;
}

}  // namespace qmp
