// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// equality of normal forms (tolerance 0); ranges and sample sizes are fixed below.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qmp/cli.hpp"
#include "qmp/oracle.hpp"
#include "qmp/suites.hpp"

using namespace qmp;

namespace {

constexpr Family kFamilies[] = {Family::TypeI, Family::TypeII, Family::TypeIII};

// Pinned parameters.
constexpr int kProp1Range = 4;
constexpr int kPowerRange = 5;
constexpr int kInternalRange = 4;
constexpr int kProbeK = 8;
constexpr int kTransformRange = 3;
constexpr int kModularWords = 50;
constexpr int kModularMaxLength = 8;
constexpr int kDiagonalTableRange = 4;
constexpr int kQuantumGroupRange = 3;
constexpr int kRepeatedProductMax = 4;
constexpr int kPBWWords = 300;
constexpr int kPBWMaxLength = 6;
constexpr int kOracleWords = 500;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

bool all_hold(const std::vector<RelationReport>& reps) {
  for (const auto& r : reps)
    if (!r.all_hold()) return false;
  return true;
}

Outcome iterated_identities() {
  Outcome o;
  for (Family f : kFamilies)
    o.require(verify_prop1(f, kProp1Range).all_hold(), std::string("Type ") + name(f));
  return o;
}

Outcome generator_powers() {
  Outcome o;
  for (Family f : kFamilies) o.require(verify_prop3(f, kPowerRange).all_hold(), std::string("Type ") + name(f));
  const Family III = Family::TypeIII;
  Element corner = Element::from_blocks({{Gen::B1, 1}, {Gen::G1, 1}}, III).scaled(1 + LaurentScalar::r_pow(1));
  o.require(pow(generator_matrix(1, III), 2).a12 == corner, "corner of U1^2 (Type III) is not (1+r) b1 g1");
  return o;
}

Outcome internal_relations_of_products() {
  Outcome o;
  o.require(all_hold(verify_theorem1(Family::TypeI, kInternalRange)), "Type I");
  o.require(all_hold(verify_theorem1(Family::TypeII, kInternalRange)), "Type II");
  for (int n = -kInternalRange; n <= kInternalRange; ++n)
    for (int m = -kInternalRange; m <= kInternalRange; ++m) {
      const UTMatrix c = closed_product_entries(n, m, Family::TypeI);
      const auto scalar = (c.a11 * c.a22).as_scalar();
      o.require(scalar && *scalar == LaurentScalar::q_pow(2 * n * m), "Type I diagonal product is not q^{nm}");
    }
  auto diag = verify_theorem1(Family::TypeIII, kInternalRange);
  o.require(all_hold(diag) && diag.size() == 2 * kInternalRange + 1, "Type III diagonal");
  auto probe = restrictedness_probe(2, 1, kProbeK);
  bool every_k_violated = probe.size() == 2 * kProbeK + 1;
  for (const auto& r : probe) every_k_violated = every_k_violated && r.ok() && !r.all_hold();
  o.require(every_k_violated, "Type III (2,1) probe: some r^k satisfied the relation");
  return o;
}

Outcome product_pairs() {
  Outcome o;
  for (Family f : kFamilies) {
    auto reps = verify_theorem2(f, kTransformRange);
    const std::size_t expected = f == Family::TypeIII ? 2 * kTransformRange + 1
                                                      : static_cast<std::size_t>(std::pow(2 * kTransformRange + 1, 4));
    o.require(all_hold(reps) && reps.size() == expected, std::string("Type ") + name(f));
  }
  return o;
}

Outcome modular_action() {
  Outcome o;
  for (Family f : {Family::TypeI, Family::TypeII}) {
    const QPair p = QPair::generators(f);
    o.require(verify_presentation(p).all_hold(), std::string("presentation, Type ") + name(f));
    std::mt19937 rng(f == Family::TypeI ? 101 : 202);
    std::uniform_int_distribution<int> len(1, kModularMaxLength), letter(0, 3);
    for (int k = 0; k < kModularWords; ++k) {
      ModularWord w;
      for (int n = len(rng); n > 0; --n) w.letters.push_back(static_cast<ModLetter>(letter(rng)));
      const auto rep = check_correspondence(w, p);
      o.require(rep.all_hold(), "correspondence [" + to_string(w) + "]");
      o.require(apply_word(w, p) == apply_word(w.free_reduced(), p), "free reduction [" + to_string(w) + "]");
    }
  }
  const QPair p = QPair::generators(Family::TypeI);
  const QPair st = apply_word(ModularWord::parse("S T"), p);
  o.require(st.u1 == p.u2 && st.u2 == (inverse(p.u2) * inverse(p.u1)).scaled(LaurentScalar::q_pow(1)),
            "(ST) intermediate");
  return o;
}

Outcome diagonal_table_and_rescaling() {
  Outcome o;
  o.require(verify_prop2(kDiagonalTableRange).all_hold(), "diagonal table from a1 a2 = q a2 a1");
  const LaurentScalar q = LaurentScalar::q_pow(2), r = LaurentScalar::r_pow(1);
  o.require(check_pair(rescale_pair(QPair::generators(Family::TypeIII), q, r)).all_hold(), "(q, r) Type III");
  o.require(check_pair(rescale_pair(QPair::generators(Family::TypeI), LaurentScalar::q_pow(1), 1)).all_hold(),
            "(s, 1) Type I");
  o.require(check_pair(rescale_pair(QPair::generators(Family::TypeII), -LaurentScalar::q_pow(-3), q)).all_hold(),
            "(-s^-3, q) Type II");
  return o;
}

Outcome quantum_group() {
  Outcome o;
  o.require(all_hold(verify_results(kQuantumGroupRange)), "powers, determinant, inverse");
  FullMatrix m = FullMatrix::identity();
  for (int n = 1; n <= kRepeatedProductMax; ++n) {
    m = m * generator_matrix_q();
    o.require(check_R(m, 2 * n).all_hold(), "repeated product n=" + std::to_string(n));
  }
  std::mt19937 rng(9090);
  std::uniform_int_distribution<int> len(0, kPBWMaxLength), letter(0, 3);
  int discrepancies = 0;
  for (int k = 0; k < kPBWWords; ++k) {
    std::vector<int> word(len(rng));
    for (int& l : word) l = letter(rng);
    QGElement kernel = QGElement::one();
    for (int l : word) kernel *= QGElement::generator(static_cast<QGen>(l));
    const auto left = rewrite_word(word, RewriteStrategy::Leftmost);
    const auto right = rewrite_word(word, RewriteStrategy::Rightmost);
    if (left != right || left != kernel) ++discrepancies;
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " PBW discrepancies");
  return o;
}

Outcome kernel_matches_oracle() {
  Outcome o;
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> len(1, 6), exp(-2, 2), coin(0, 1), diag(0, 3), betas(1, 2);
  const Gen diagonal[] = {Gen::A1, Gen::A2, Gen::G1, Gen::G2};
  for (Family f : kFamilies) {
    int admissible = 0, mismatches = 0, attempts = 0;
    while (admissible < kOracleWords && attempts < 20 * kOracleWords) {
      ++attempts;
      std::vector<detail::Block> word;
      const int n = len(rng);
      const int beta_slot = coin(rng) ? std::uniform_int_distribution<int>(0, n)(rng) : -1;
      for (int k = 0; k <= n; ++k) {
        if (k == beta_slot) word.push_back({beta(betas(rng)), 1});
        if (k == n) break;
        Gen g = diagonal[diag(rng)];
        if (beta_slot >= 0) g = k < beta_slot ? alpha(index_of(g)) : gamma(index_of(g));
        word.push_back({g, exp(rng)});
      }
      Element by_oracle;
      try {
        by_oracle = oracle_reduce(expand(word), f);
      } catch (const AlgebraError&) {
        continue;
      }
      ++admissible;
      try {
        if (Element::from_blocks(word, f) != by_oracle) ++mismatches;
      } catch (const AlgebraError&) {
        ++mismatches;
      }
    }
    o.require(admissible == kOracleWords, std::string("too few admissible words, Type ") + name(f));
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches, Type " + name(f));
  }
  return o;
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string(QMP_CLI_PATH) + " " + args + " 2>/dev/null";
  Shell r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome command_line() {
  Outcome o;
  o.require(shell("verify --suite theorem1 --type I --range 3").code == 0, "verify theorem1 I");
  o.require(shell("verify --suite theorem3 --type II").code == 0, "verify theorem3 II");
  o.require(shell("reduce --type II 'a1 * b2'").code == 0, "reduce");
  o.require(shell("modular --type I --word 'S T S T S T'").code == 0, "modular");
  o.require(shell("reduce --type II 'a1 * * b2'").code == 2, "malformed reduce");
  o.require(shell("verify --suite theorem1").code == 2, "missing --type");
  o.require(shell("reduce --type II 'b1 * b2'").code == 1, "beta-degree error");
  const std::string json = "verify --suite all --type III --range 2 --format json";
  const Shell a = shell(json), b = shell(json);
  o.require(a.code == 0 && !a.out.empty() && a.out == b.out, "JSON output differs between runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"iterated swap and beta-push identities, |n|,|m| <= 4, all families", iterated_identities},
      {"generator powers equal the closed form, |n| <= 5, all families; Type III corner of U1^2", generator_powers},
      {"internal relations of U1^n U2^m, |n|,|m| <= 4; Type III diagonal; (2,1) probe violated for |k| <= 8",
       internal_relations_of_products},
      {"product pairs keep every relation with q -> q^{nt-ms}, |n,m,s,t| <= 3; Type III (U1^n, U2^n)",
       product_pairs},
      {"modular action: S^4 = (ST)^3 = 1, (ST) intermediate, 50 random words per family", modular_action},
      {"diagonal table derived from one relation, range 4; three unit rescalings", diagonal_table_and_rescaling},
      {"quantum group powers, inverse, central determinant, 300-word PBW smoke test", quantum_group},
      {"bulk kernel equals naive rewriter on 500 admissible words per family", kernel_matches_oracle},
      {"command line exit codes 0/1/2 and deterministic JSON", command_line},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " (exact)";
    if (!o.pass) std::cout << ": " << o.detail;
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
