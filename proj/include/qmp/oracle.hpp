#pragma once

// Naive single-letter rewriter for the triangular algebra. It shares no code
// with the block kernel in talgebra.hpp beyond the relation tables and exists
// to cross-check it.

#include <optional>
#include <span>
#include <vector>

#include "qmp/talgebra.hpp"

namespace qmp {

struct Letter {
  Gen g;
  int sign = 1;  // +1 or -1; betas are always +1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Expand generator powers into signed letters.
inline std::vector<Letter> expand(std::span<const detail::Block> blocks) {
  std::vector<Letter> word;
  for (const auto& b : blocks) {
    if (is_beta(b.g)) {
      if (b.e != 0 && b.e != 1) throw AlgebraError(ErrorKind::BetaExponent, "beta exponent must be 0 or 1");
      if (b.e == 1) word.push_back({b.g, 1});
      continue;
    }
    for (int k = 0; k < std::abs(b.e); ++k) word.push_back({b.g, b.e > 0 ? 1 : -1});
  }
  return word;
}

namespace detail {

class NaiveRewriter {
 public:
  NaiveRewriter(std::vector<Letter> word, Family f) : word_(std::move(word)), family_(f) {}

  Element run() {
    int betas = 0;
    for (const auto& l : word_) betas += is_beta(l.g) ? 1 : 0;
    if (betas > 1) throw AlgebraError(ErrorKind::BetaDegreeExceeded, "word has beta-degree >= 2");
    while (step()) {
    }
    return finish();
  }

 private:
  std::ptrdiff_t beta_pos() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
      if (is_beta(word_[i].g)) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }

  // Applies the first rule that matches at the leftmost possible position.
  bool step() {
    const auto bp = beta_pos();
    for (std::size_t i = 0; i < word_.size(); ++i) {
      const bool right_of_beta = bp >= 0 && static_cast<std::ptrdiff_t>(i) > bp;
      Letter& x = word_[i];
      if (family_ == Family::TypeI && !is_beta(x.g)) {
        if (is_gamma(x.g) && !right_of_beta) {
          x = {alpha(index_of(x.g)), -x.sign};
          return true;
        }
        if (is_alpha(x.g) && right_of_beta) {
          x = {gamma(index_of(x.g)), -x.sign};
          return true;
        }
      }
      if (i + 1 == word_.size()) break;
      const Letter y = word_[i + 1];
      if (x.g == y.g && !is_beta(x.g) && x.sign == -y.sign) {
        word_.erase(word_.begin() + static_cast<std::ptrdiff_t>(i), word_.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        return true;
      }
      if (!is_beta(x.g) && !is_beta(y.g) && rank(x.g) > rank(y.g)) {
        // x y = q^{-w(y,x)} y x
        s_ -= 2 * commutation_weight(y.g, x.g) * x.sign * y.sign;
        std::swap(word_[i], word_[i + 1]);
        return true;
      }
      if (is_alpha(x.g) && is_beta(y.g)) {
        const int j = index_of(x.g);
        const int sign = x.sign;
        auto [ds, dr] = push_factor(j, index_of(y.g), family_);
        s_ += ds * sign;
        r_ += dr * sign;
        word_[i] = y;
        word_[i + 1] = {gamma(j), sign};
        return true;
      }
    }
    return false;
  }

  Element finish() const {
    TriMonomial m;
    bool seen_beta = false;
    for (const auto& l : word_) {
      if (is_beta(l.g)) {
        seen_beta = true;
        m.beta = l.g == Gen::B1 ? TriMonomial::Beta::B1 : TriMonomial::Beta::B2;
        continue;
      }
      if (seen_beta && is_alpha(l.g))
        throw AlgebraError(ErrorKind::NonReducible, "alpha to the right of a beta has no defining relation");
      if (!seen_beta && is_gamma(l.g) && beta_pos() >= 0)
        throw AlgebraError(ErrorKind::NonReducible, "gamma to the left of a beta has no defining relation");
      m.e[rank(l.g)] += l.sign;
    }
    Element out(family_);
    out.add_term(m, LaurentScalar::monomial(1, s_, r_));
    return out;
  }

  std::vector<Letter> word_;
  Family family_;
  int s_ = 0;
  int r_ = 0;
};

}  // namespace detail

/// Reduce a word by repeatedly applying the first applicable directed rule.
inline Element oracle_reduce(std::span<const Letter> word, Family f) {
  return detail::NaiveRewriter({word.begin(), word.end()}, f).run();
}

}  // namespace qmp
