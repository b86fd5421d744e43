#pragma once

// Triangular pair algebra: generators alpha_i, beta_i, gamma_i (i = 1, 2),
// with alpha_i, gamma_i invertible, under relation family Type I, II or III.
//
// Normal form of a monomial: a1^a a2^b [b1|b2] g1^c g2^d, beta-degree <= 1.
// A beta-monomial never carries alpha exponents (they are pushed through the
// beta and become gammas). Under Type I, gamma_i = alpha_i^{-1}, so beta-free
// monomials carry no gamma exponents.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmp/error.hpp"
#include "qmp/laurent.hpp"

namespace qmp {

enum class Family : std::uint8_t { TypeI, TypeII, TypeIII };

inline const char* name(Family f) {
  switch (f) {
    case Family::TypeI: return "I";
    case Family::TypeII: return "II";
    case Family::TypeIII: return "III";
  }
  return "?";
}

/// Under Types I and II the internal beta relation carries no parameter.
inline bool has_formal_r(Family f) { return f == Family::TypeIII; }

enum class Gen : std::uint8_t { A1, A2, G1, G2, B1, B2 };

inline bool is_beta(Gen g) { return g == Gen::B1 || g == Gen::B2; }
inline bool is_alpha(Gen g) { return g == Gen::A1 || g == Gen::A2; }
inline bool is_gamma(Gen g) { return g == Gen::G1 || g == Gen::G2; }
/// 1 or 2.
inline int index_of(Gen g) { return (g == Gen::A1 || g == Gen::G1 || g == Gen::B1) ? 1 : 2; }
inline Gen alpha(int i) { return i == 1 ? Gen::A1 : Gen::A2; }
inline Gen gamma(int i) { return i == 1 ? Gen::G1 : Gen::G2; }
inline Gen beta(int i) { return i == 1 ? Gen::B1 : Gen::B2; }

inline const char* name(Gen g) {
  switch (g) {
    case Gen::A1: return "a1";
    case Gen::A2: return "a2";
    case Gen::G1: return "g1";
    case Gen::G2: return "g2";
    case Gen::B1: return "b1";
    case Gen::B2: return "b2";
  }
  return "?";
}

/// Exponent of q (not s) in x y = q^w y x, for diagonal generators.
/// Antisymmetric; diagonal relations of the mutual and internal tables.
inline int commutation_weight(Gen x, Gen y) {
  auto rank = [](Gen g) { return static_cast<int>(g); };
  if (x == y) return 0;
  if (rank(x) > rank(y)) return -commutation_weight(y, x);
  if (x == Gen::A1 && y == Gen::A2) return 1;   // a1 a2 = q a2 a1
  if (x == Gen::A1 && y == Gen::G1) return 0;   // a_i g_i = g_i a_i
  if (x == Gen::A1 && y == Gen::G2) return -1;  // a1 g2 = q^-1 g2 a1
  if (x == Gen::A2 && y == Gen::G1) return 1;   // a2 g1 = q g1 a2
  if (x == Gen::A2 && y == Gen::G2) return 0;
  if (x == Gen::G1 && y == Gen::G2) return 1;  // g1 g2 = q g2 g1
  return 0;
}

/// (s, r) exponents of c in  alpha_j beta_i = c beta_i gamma_j.
inline std::pair<int, int> push_factor(int j, int i, Family f) {
  if (j == i) return {0, has_formal_r(f) ? 1 : 0};
  return j == 1 ? std::pair{2, 0} : std::pair{-2, 0};
}

struct TriMonomial {
  enum class Beta : std::uint8_t { None, B1, B2 };

  Beta beta = Beta::None;
  std::array<int, 4> e{};  // exponents of a1, a2, g1, g2

  bool is_identity() const { return beta == Beta::None && e == std::array<int, 4>{}; }
  int beta_index() const { return beta == Beta::B1 ? 1 : beta == Beta::B2 ? 2 : 0; }

  friend auto operator<=>(const TriMonomial&, const TriMonomial&) = default;
};

inline std::string to_string(const TriMonomial& m) {
  std::string out;
  auto factor = [&](const char* g, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (k != 1) out += "^" + std::to_string(k);
  };
  factor("a1", m.e[0]);
  factor("a2", m.e[1]);
  if (m.beta != TriMonomial::Beta::None) factor(m.beta == TriMonomial::Beta::B1 ? "b1" : "b2", 1);
  factor("g1", m.e[2]);
  factor("g2", m.e[3]);
  return out.empty() ? "1" : out;
}

namespace detail {

struct Block {
  Gen g;
  int e;
};

struct Normalized {
  int s = 0;
  int r = 0;
  TriMonomial mono;
};

inline int rank(Gen g) { return static_cast<int>(g); }

// Adjacent block swaps into canonical order, merging equal generators.
// Each swap y^m x^n -> x^n y^m contributes q^{-w(x,y) n m}.
inline void sort_diagonal(std::vector<Block>& blocks, int& s_exp) {
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    for (std::size_t j = i; j > 0 && rank(blocks[j - 1].g) > rank(blocks[j].g); --j) {
      const Block& y = blocks[j - 1];
      const Block& x = blocks[j];
      s_exp -= 2 * commutation_weight(x.g, y.g) * x.e * y.e;
      std::swap(blocks[j - 1], blocks[j]);
    }
  }
  std::vector<Block> merged;
  for (const auto& b : blocks) {
    if (!merged.empty() && merged.back().g == b.g)
      merged.back().e += b.e;
    else
      merged.push_back(b);
  }
  std::erase_if(merged, [](const Block& b) { return b.e == 0; });
  blocks = std::move(merged);
}

/// Bulk normal form of a product of generator powers.
inline Normalized normalize(std::vector<Block> blocks, Family f) {
  Normalized out;
  if (f == Family::TypeI) {
    for (auto& b : blocks) {
      if (is_gamma(b.g)) b = {alpha(index_of(b.g)), -b.e};
    }
  }
  std::erase_if(blocks, [](const Block& b) { return b.e == 0; });

  auto beta_at = blocks.end();
  int beta_count = 0;
  for (auto it = blocks.begin(); it != blocks.end(); ++it) {
    if (!is_beta(it->g)) continue;
    if (it->e != 1) throw AlgebraError(ErrorKind::BetaExponent, "beta exponent must be 0 or 1");
    ++beta_count;
    beta_at = it;
  }
  if (beta_count > 1) throw AlgebraError(ErrorKind::BetaDegreeExceeded, "product has beta-degree >= 2");

  if (beta_count == 0) {
    sort_diagonal(blocks, out.s);
    for (const auto& b : blocks) out.mono.e[rank(b.g)] = b.e;
    return out;
  }

  const int bi = index_of(beta_at->g);
  std::vector<Block> left(blocks.begin(), beta_at);
  std::vector<Block> right(beta_at + 1, blocks.end());
  sort_diagonal(left, out.s);

  std::vector<Block> pushed;
  for (const auto& b : left) {
    if (is_gamma(b.g))
      throw AlgebraError(ErrorKind::NonReducible, "gamma to the left of a beta has no defining relation");
    const int j = index_of(b.g);
    auto [ds, dr] = push_factor(j, bi, f);
    out.s += ds * b.e;
    out.r += dr * b.e;
    // Under Type I the gamma produced by the push is stored as alpha^{-1}.
    pushed.push_back(f == Family::TypeI ? Block{alpha(j), -b.e} : Block{gamma(j), b.e});
  }
  pushed.insert(pushed.end(), right.begin(), right.end());
  sort_diagonal(pushed, out.s);

  out.mono.beta = bi == 1 ? TriMonomial::Beta::B1 : TriMonomial::Beta::B2;
  for (const auto& b : pushed) {
    if (f == Family::TypeI) {
      out.mono.e[2 + index_of(b.g) - 1] = -b.e;
    } else {
      if (is_alpha(b.g))
        throw AlgebraError(ErrorKind::NonReducible, "alpha to the right of a beta has no defining relation");
      out.mono.e[rank(b.g)] = b.e;
    }
  }
  return out;
}

inline void append_blocks(std::vector<Block>& out, const TriMonomial& m) {
  out.push_back({Gen::A1, m.e[0]});
  out.push_back({Gen::A2, m.e[1]});
  if (m.beta != TriMonomial::Beta::None) out.push_back({beta(m.beta_index()), 1});
  out.push_back({Gen::G1, m.e[2]});
  out.push_back({Gen::G2, m.e[3]});
}

}  // namespace detail

/// Linear combination of normal-form monomials with Laurent coefficients.
class Element {
 public:
  using Terms = std::map<TriMonomial, LaurentScalar>;

  explicit Element(Family f = Family::TypeII) : family_(f) {}

  static Element zero(Family f) { return Element(f); }
  static Element scalar(const LaurentScalar& c, Family f) {
    Element x(f);
    x.add_term(TriMonomial{}, c);
    return x;
  }
  static Element one(Family f) { return scalar(1, f); }

  /// Single generator power; beta accepts only exponents 0 and 1.
  static Element generator(Gen g, int exponent, Family f) {
    if (is_beta(g) && exponent != 0 && exponent != 1)
      throw AlgebraError(ErrorKind::BetaExponent,
                         std::string(name(g)) + "^" + std::to_string(exponent) + " is not supported");
    return from_blocks({{g, exponent}}, f);
  }

  /// Normal form of the ordered product of generator powers.
  static Element from_blocks(std::vector<detail::Block> blocks, Family f) {
    auto nf = detail::normalize(std::move(blocks), f);
    Element x(f);
    x.add_term(nf.mono, LaurentScalar::monomial(1, nf.s, nf.r));
    return x;
  }

  Family family() const { return family_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_beta_free() const {
    for (const auto& [m, c] : terms_)
      if (m.beta != TriMonomial::Beta::None) return false;
    return true;
  }

  /// c if this element is c * 1.
  std::optional<LaurentScalar> as_scalar() const {
    if (terms_.empty()) return LaurentScalar{};
    if (terms_.size() == 1 && terms_.begin()->first.is_identity()) return terms_.begin()->second;
    return std::nullopt;
  }

  void add_term(const TriMonomial& m, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element scaled(const LaurentScalar& c) const {
    Element x(family_);
    if (c.is_zero()) return x;
    for (const auto& [m, k] : terms_) x.terms_.emplace(m, k * c);
    return x;
  }

  Element operator-() const { return scaled(-1); }

  Element& operator+=(const Element& y) {
    check_family(y);
    for (const auto& [m, c] : y.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& y) { return *this += -y; }
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }

  friend Element operator*(const Element& x, const Element& y) {
    x.check_family(y);
    Element z(x.family_);
    std::vector<detail::Block> blocks;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        blocks.clear();
        detail::append_blocks(blocks, mx);
        detail::append_blocks(blocks, my);
        auto nf = detail::normalize(blocks, x.family_);
        z.add_term(nf.mono, (cx * cy).shift(nf.s, nf.r));
      }
    }
    return z;
  }
  Element& operator*=(const Element& y) { return *this = *this * y; }

  friend Element operator*(const LaurentScalar& c, const Element& x) { return x.scaled(c); }

  friend bool operator==(const Element&, const Element&) = default;

  void check_family(const Element& y) const {
    if (family_ != y.family_)
      throw AlgebraError(ErrorKind::FamilyMismatch,
                         std::string("Type ") + name(family_) + " vs Type " + name(y.family_));
  }

 private:
  Family family_;
  Terms terms_;
};

/// Inverse of c * m where c is a unit scalar and m a beta-free monomial.
inline Element inverse(const Element& x) {
  if (!x.is_single_term())
    throw AlgebraError(ErrorKind::NonInvertibleEntry, "entry is not a single monomial");
  const auto& [m, c] = *x.terms().begin();
  if (m.beta != TriMonomial::Beta::None)
    throw AlgebraError(ErrorKind::NonInvertibleEntry, "entry contains a beta generator");
  if (!c.is_unit()) throw AlgebraError(ErrorKind::NonInvertibleEntry, "coefficient " + c.str() + " is not a unit");
  std::vector<detail::Block> blocks{{Gen::G2, -m.e[3]}, {Gen::G1, -m.e[2]}, {Gen::A2, -m.e[1]}, {Gen::A1, -m.e[0]}};
  return Element::from_blocks(std::move(blocks), x.family()).scaled(c.unit_inverse());
}

/// Integer power; negative exponents require an invertible monomial.
inline Element pow(const Element& x, int n) {
  if (n < 0) return pow(inverse(x), -n);
  Element out = Element::one(x.family());
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

inline std::string to_string(const Element& x) {
  return format_terms(x.terms(), [](const TriMonomial& m) { return m.is_identity() ? std::string() : to_string(m); });
}

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace qmp
