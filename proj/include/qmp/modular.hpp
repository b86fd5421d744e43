#pragma once

// The modular group acting on Type I and Type II pairs through
// S(U1, U2) = (U2, U1^-1) and T(U1, U2) = (q^-1/2 U1 U2, U2).

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qmp/pairs.hpp"

namespace qmp {

enum class ModLetter { S, SInv, T, TInv };

inline const char* name(ModLetter l) {
  switch (l) {
    case ModLetter::S: return "S";
    case ModLetter::SInv: return "S'";
    case ModLetter::T: return "T";
    case ModLetter::TInv: return "T'";
  }
  return "?";
}

inline ModLetter inverse(ModLetter l) {
  switch (l) {
    case ModLetter::S: return ModLetter::SInv;
    case ModLetter::SInv: return ModLetter::S;
    case ModLetter::T: return ModLetter::TInv;
    case ModLetter::TInv: return ModLetter::T;
  }
  return l;
}

/// A word L1 L2 ... Lk denotes the composite map L1 o L2 o ... o Lk.
struct ModularWord {
  std::vector<ModLetter> letters;

  /// Whitespace-separated letters S, S', T, T'.
  static ModularWord parse(std::string_view text) {
    ModularWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "S") w.letters.push_back(ModLetter::S);
      else if (tok == "S'") w.letters.push_back(ModLetter::SInv);
      else if (tok == "T") w.letters.push_back(ModLetter::T);
      else if (tok == "T'") w.letters.push_back(ModLetter::TInv);
      else throw std::invalid_argument("unknown modular letter '" + tok + "'");
    }
    return w;
  }

  ModularWord free_reduced() const {
    ModularWord out;
    for (ModLetter l : letters) {
      if (!out.letters.empty() && out.letters.back() == inverse(l)) out.letters.pop_back();
      else out.letters.push_back(l);
    }
    return out;
  }

  ModularWord operator+(const ModularWord& o) const {
    ModularWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
  }

  friend bool operator==(const ModularWord&, const ModularWord&) = default;
};

inline std::string to_string(const ModularWord& w) {
  std::string out;
  for (ModLetter l : w.letters) {
    if (!out.empty()) out += ' ';
    out += name(l);
  }
  return out;
}

struct SL2ZMatrix {
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }

  friend SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const SL2ZMatrix&, const SL2ZMatrix&) = default;
};

inline std::string to_string(const SL2ZMatrix& m) {
  return "[[" + std::to_string(m.a) + ", " + std::to_string(m.b) + "], [" + std::to_string(m.c) + ", " +
         std::to_string(m.d) + "]]";
}

inline SL2ZMatrix letter_matrix(ModLetter l) {
  switch (l) {
    case ModLetter::S: return {0, 1, -1, 0};
    case ModLetter::SInv: return {0, -1, 1, 0};
    case ModLetter::T: return {1, 1, 0, 1};
    case ModLetter::TInv: return {1, -1, 0, 1};
  }
  return {};
}

/// Rows give the exponents of each component of the image pair in (U1, U2).
inline SL2ZMatrix word_to_matrix(const ModularWord& w) {
  SL2ZMatrix m;
  for (ModLetter l : w.letters) m = m * letter_matrix(l);
  return m;
}

namespace detail {

inline void require_modular_family(const QPair& p) {
  if (p.family == Family::TypeIII)
    throw AlgebraError(ErrorKind::UnsupportedFamily, "the modular action is defined for Type I and Type II pairs");
}

inline QPair apply_letter(ModLetter l, const QPair& p) {
  QPair out = p;
  // Type I carries q^{-1/2} on T and q^{+1/2} on T'.
  const bool prefactor = p.family == Family::TypeI;
  if (prefactor && p.q_half % 2 != 0)
    throw AlgebraError(ErrorKind::UnsupportedTransform, "T needs a quarter power of q");
  switch (l) {
    case ModLetter::S:
      out.u1 = p.u2;
      out.u2 = inverse(p.u1);
      break;
    case ModLetter::SInv:
      out.u1 = inverse(p.u2);
      out.u2 = p.u1;
      break;
    case ModLetter::T:
      out.u1 = p.u1 * p.u2;
      if (prefactor) out.u1 = out.u1.scaled(LaurentScalar::q_pow(-p.q_half / 2));
      break;
    case ModLetter::TInv:
      out.u1 = p.u1 * inverse(p.u2);
      if (prefactor) out.u1 = out.u1.scaled(LaurentScalar::q_pow(p.q_half / 2));
      break;
  }
  return out;
}

}  // namespace detail

/// The rightmost letter acts first, so (S T)(P) = S(T(P)).
inline QPair apply_word(const ModularWord& w, const QPair& p) {
  detail::require_modular_family(p);
  QPair out = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = detail::apply_letter(*it, out);
  return out;
}

/// S^4(P) = P and (ST)^3(P) = P, entrywise.
inline RelationReport verify_presentation(const QPair& p) {
  detail::require_modular_family(p);
  RelationReport rep{"theorem3", name(p.family), {}, {}};
  rep.records.push_back(compare("S^4(P)=P", apply_word(ModularWord::parse("S S S S"), p), p));
  rep.records.push_back(compare("(ST)^3(P)=P", apply_word(ModularWord::parse("S T S T S T"), p), p));
  return rep;
}

namespace detail {

// Exponents (a, b) with x = lambda * u1^a u2^b, read off the (1,1) entries.
inline std::array<long long, 2> extract_exponents(const Element& x, const Element& u1, const Element& u2) {
  auto alpha_part = [](const Element& e) -> std::array<long long, 2> {
    if (!e.is_single_term() || e.terms().begin()->first.beta != TriMonomial::Beta::None)
      throw AlgebraError(ErrorKind::CorrespondenceBroken, "diagonal entry is not a monomial: " + to_string(e));
    const auto& ex = e.terms().begin()->first.e;
    return {ex[0] - ex[2], ex[1] - ex[3]};
  };
  const auto v = alpha_part(x), e1 = alpha_part(u1), e2 = alpha_part(u2);
  const long long det = e1[0] * e2[1] - e1[1] * e2[0];
  if (det == 0) throw AlgebraError(ErrorKind::CorrespondenceBroken, "base pair has dependent diagonals");
  const long long na = v[0] * e2[1] - v[1] * e2[0];
  const long long nb = e1[0] * v[1] - e1[1] * v[0];
  if (na % det != 0 || nb % det != 0)
    throw AlgebraError(ErrorKind::CorrespondenceBroken, "exponents are not integral: " + to_string(x));
  return {na / det, nb / det};
}

}  // namespace detail

/// Each component of w(P) is lambda * U1^a U2^b with lambda a unit s-monomial,
/// and the exponent rows (a, b) form word_to_matrix(w).
inline RelationReport check_correspondence(const ModularWord& w, const QPair& p) {
  const QPair image = apply_word(w, p);
  RelationReport rep{"correspondence", name(p.family), {}, {}};
  SL2ZMatrix extracted;
  const UTMatrix* comps[2] = {&image.u1, &image.u2};
  for (int k = 0; k < 2; ++k) {
    const auto [a, b] = detail::extract_exponents(comps[k]->a11, p.u1.a11, p.u2.a11);
    const UTMatrix base = pow(p.u1, static_cast<int>(a)) * pow(p.u2, static_cast<int>(b));
    const auto lambda = unit_ratio(*comps[k], base);
    if (!lambda)
      throw AlgebraError(ErrorKind::CorrespondenceBroken, "component " + std::to_string(k + 1) +
                                                              " is not a scalar multiple of U1^a U2^b: " +
                                                              to_string(*comps[k]));
    const std::string tag = "V" + std::to_string(k + 1);
    rep.records.push_back(
        {tag + "=lambda*U1^aU2^b", !lambda->has_r(), false, to_string(*comps[k]), lambda->str() + " * " + to_string(base)});
    (k == 0 ? extracted.a : extracted.c) = a;
    (k == 0 ? extracted.b : extracted.d) = b;
  }
  rep.records.push_back(compare("exponents=word_to_matrix", extracted, word_to_matrix(w)));
  return rep;
}

}  // namespace qmp
