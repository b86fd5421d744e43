#pragma once

// Named verification suites, as run by the command-line front end.

#include <string>
#include <string_view>
#include <vector>

#include "qmp/modular.hpp"
#include "qmp/mq2.hpp"
#include "qmp/pairs.hpp"

namespace qmp {

/// x^n y^m = q^{wnm} y^m x^n for each pair of diagonal generators, and
/// alpha_j^n beta_i = c^n beta_i gamma_j^n for each beta push.
inline RelationReport verify_prop1(Family f, int range) {
  struct Swap {
    Gen x, y;
    int w;
  };
  // x y = q^w y x, read off the relation tables.
  static constexpr Swap swaps[] = {{Gen::A1, Gen::A2, 1},  {Gen::A1, Gen::G2, -1}, {Gen::A2, Gen::G1, 1},
                                   {Gen::G1, Gen::G2, 1},  {Gen::A1, Gen::G1, 0},  {Gen::A2, Gen::G2, 0}};
  struct Push {
    int j, i, s;
    bool r;
  };
  // alpha_j beta_i = s^s r^[r] beta_i gamma_j
  static constexpr Push pushes[] = {{1, 1, 0, true}, {2, 2, 0, true}, {1, 2, 2, false}, {2, 1, -2, false}};

  RelationReport rep{"prop1", name(f), {range, range, 0, 0}, {}};
  auto g = [f](Gen x, int e) { return Element::generator(x, e, f); };
  for (const auto& [x, y, w] : swaps) {
    for (int n = -range; n <= range; ++n) {
      for (int m = -range; m <= range; ++m) {
        const std::string label = std::string(name(x)) + "^" + std::to_string(n) + " " + name(y) + "^" +
                                  std::to_string(m) + "=q^" + std::to_string(w * n * m) + " swap";
        rep.records.push_back(
            compare(label, g(x, n) * g(y, m), (g(y, m) * g(x, n)).scaled(LaurentScalar::q_pow(2 * w * n * m))));
      }
    }
  }
  for (const auto& [j, i, s, has_r] : pushes) {
    for (int n = -range; n <= range; ++n) {
      const LaurentScalar c = LaurentScalar::monomial(1, s * n, has_r && has_formal_r(f) ? n : 0);
      const std::string label = std::string(name(alpha(j))) + "^" + std::to_string(n) + " " + name(beta(i)) + " push";
      rep.records.push_back(compare(label, g(alpha(j), n) * g(beta(i), 1),
                                    (g(beta(i), 1) * g(gamma(j), n)).scaled(c)));
    }
  }
  return rep;
}

/// pow(U_i, n) against the closed form with quantum-integer corner.
inline RelationReport verify_prop3(Family f, int range) {
  RelationReport rep{"prop3", name(f), {range, 0, 0, 0}, {}};
  for (int i = 1; i <= 2; ++i) {
    const UTMatrix u = generator_matrix(i, f);
    for (int n = -range; n <= range; ++n)
      rep.records.push_back(compare("U" + std::to_string(i) + "^" + std::to_string(n) + "=closed form", pow(u, n),
                                    closed_power(i, n, f)));
  }
  return rep;
}

inline const std::vector<std::string>& correspondence_words() {
  static const std::vector<std::string> words{"S", "T", "S'", "T'", "S T", "S T S T T", "T' S T T S'", "S S T' S"};
  return words;
}

/// Presentation relations, the (ST) intermediate, and the exponent lattice
/// on a fixed list of words.
inline std::vector<RelationReport> verify_theorem3(Family f) {
  const QPair p = QPair::generators(f);
  std::vector<RelationReport> out;
  out.push_back(verify_presentation(p));
  const QPair st = apply_word(ModularWord::parse("S T"), p);
  const LaurentScalar half = f == Family::TypeI ? LaurentScalar::q_pow(1) : LaurentScalar(1);
  out.back().records.push_back(compare("(ST)(P)=(U2,q^1/2U2^-1U1^-1)", st,
                                       QPair{p.u2, (inverse(p.u2) * inverse(p.u1)).scaled(half), f, 2, 1}));
  for (const auto& w : correspondence_words()) {
    RelationReport rep = check_correspondence(ModularWord::parse(w), p);
    rep.suite = "theorem3";
    for (auto& rec : rep.records) rec.relation = "[" + w + "] " + rec.relation;
    out.push_back(std::move(rep));
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1",    "prop2",    "prop3", "theorem1",
                                              "theorem2", "theorem3", "mq2",   "all"};
  return names;
}

/// Run one named suite. Type III skips the modular action and adds the
/// off-diagonal restrictedness probe to theorem1.
inline std::vector<RelationReport> run_suite(std::string_view suite, Family f, int range) {
  std::vector<RelationReport> out;
  auto take = [&out](std::vector<RelationReport> reps) {
    for (auto& r : reps) out.push_back(std::move(r));
  };
  if (suite == "prop1" || suite == "all") out.push_back(verify_prop1(f, range));
  if (suite == "prop2" || suite == "all") out.push_back(verify_prop2(range));
  if (suite == "prop3" || suite == "all") out.push_back(verify_prop3(f, range));
  if (suite == "theorem1" || suite == "all") {
    take(verify_theorem1(f, range));
    if (f == Family::TypeIII) take(restrictedness_probe(2, 1, 8));
  }
  if (suite == "theorem2" || suite == "all") take(verify_theorem2(f, range));
  if (suite == "theorem3") take(verify_theorem3(f));
  if (suite == "all" && f != Family::TypeIII) take(verify_theorem3(f));
  if (suite == "mq2" || suite == "all") take(verify_results(range));
  sort_reports(out);
  return out;
}

}  // namespace qmp
