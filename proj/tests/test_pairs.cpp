#include <gtest/gtest.h>

#include <json.hpp>

#include "qmp/oracle.hpp"
#include "qmp/pairs.hpp"

using namespace qmp;

namespace {

constexpr Family kFamilies[] = {Family::TypeI, Family::TypeII, Family::TypeIII};
const LaurentScalar q = LaurentScalar::q_pow(2);
const LaurentScalar r = LaurentScalar::r_pow(1);

UTMatrix U(int i, Family f) { return generator_matrix(i, f); }

std::string failures(const RelationReport& rep) {
  std::string out;
  for (const auto& rec : rep.records)
    if (!rec.ok()) out += text_line(rep, rec) + "\n";
  return out;
}

std::string failures(const std::vector<RelationReport>& reps) {
  std::string out;
  for (const auto& rep : reps) out += failures(rep);
  return out;
}

// Letter word a1^n a2^m g1^n g2^m, reduced by the naive rewriter.
Element diagonal_product_by_oracle(int n, int m, Family f) {
  std::vector<Letter> word;
  auto push = [&](Gen g, int e) {
    for (int k = 0; k < std::abs(e); ++k) word.push_back({g, e < 0 ? -1 : 1});
  };
  push(Gen::A1, n);
  push(Gen::A2, m);
  push(Gen::G1, n);
  push(Gen::G2, m);
  return oracle_reduce(word, f);
}

}  // namespace

TEST(QCommutation, DocumentedExamples) {
  for (Family f : kFamilies) {
    EXPECT_TRUE(check_q_commutation(U(1, f), U(2, f), 2).all_hold());
    EXPECT_TRUE(check_q_commutation(U(2, f), U(1, f), -2).all_hold());
    EXPECT_TRUE(check_q_commutation(U(1, f), U(1, f), 0).all_hold());
    EXPECT_FALSE(check_q_commutation(U(1, f), U(2, f), 1).all_hold());
  }
}

TEST(Internal, DocumentedExamples) {
  const Family I = Family::TypeI, III = Family::TypeIII;
  EXPECT_TRUE(check_internal(U(1, I), LaurentScalar(1), 1).all_hold());
  EXPECT_TRUE(check_internal(pow(U(1, I), 2) * pow(U(2, I), 3), LaurentScalar::q_pow(12), 1).all_hold());
  EXPECT_TRUE(check_internal(pow(U(1, III), 2) * pow(U(2, III), 2), std::nullopt, r * r).all_hold());
  EXPECT_FALSE(check_internal(pow(U(1, III), 2) * pow(U(2, III), 2), std::nullopt, r).all_hold());
}

TEST(Internal, TypeThreeOffDiagonalViolatedForEveryCandidate) {
  const UTMatrix m = pow(U(1, Family::TypeIII), 2) * U(2, Family::TypeIII);
  for (int k = -8; k <= 8; ++k) {
    auto rep = check_internal(m, std::nullopt, LaurentScalar::r_pow(k));
    ASSERT_NE(rep.find("U.IND:AB=pBC"), nullptr);
    EXPECT_FALSE(rep.find("U.IND:AB=pBC")->holds) << k;
    EXPECT_TRUE(rep.find("U.ID:AC=CA")->holds) << k;
  }
  auto probe = restrictedness_probe(2, 1, 8);
  ASSERT_EQ(probe.size(), 17u);
  for (const auto& rep : probe) {
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.all_hold());
  }
}

TEST(Internal, ScalarDiagonalProductMatchesOracle) {
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      const Element expected = diagonal_product_by_oracle(n, m, Family::TypeI);
      const UTMatrix c = closed_product_entries(n, m, Family::TypeI);
      EXPECT_EQ(c.a11 * c.a22, expected) << n << "," << m;
      EXPECT_EQ(expected, Element::scalar(LaurentScalar::q_pow(2 * n * m), Family::TypeI));
    }
}

TEST(Mutual, DocumentedExamples) {
  for (Family f : kFamilies) EXPECT_TRUE(check_mutual(QPair::generators(f), 2).all_hold()) << name(f);

  const Family II = Family::TypeII;
  QPair p{pow(U(1, II), 2) * U(2, II), U(1, II) * U(2, II), II, 2, 1};
  EXPECT_EQ(failures(check_mutual(p, 2)), "");

  QPair same{U(1, II), U(1, II), II, 0, 1};
  EXPECT_EQ(failures(check_mutual(same, 0)), "");
  QPair same3{U(1, Family::TypeIII), U(1, Family::TypeIII), Family::TypeIII, 0, 1};
  auto rep = check_mutual(same3, 0);
  EXPECT_FALSE(rep.find("MND:A1B2=qB2C1")->holds);
}

TEST(Mutual, WrongParameterIsReported) {
  auto rep = check_mutual(QPair::generators(Family::TypeII), 4);
  EXPECT_FALSE(rep.all_hold());
  const auto* rec = rep.find("MD:A1A2=qA2A1");
  ASSERT_NE(rec, nullptr);
  EXPECT_FALSE(rec->holds);
  EXPECT_EQ(rec->lhs, "a1*a2");
  EXPECT_EQ(rec->rhs, "s^2*a1*a2");
}

TEST(ProductPair, DocumentedExamples) {
  const QPair p1 = QPair::generators(Family::TypeI);
  EXPECT_EQ(make_product_pair(p1, 1, 0, 0, 1), p1);
  EXPECT_EQ(make_product_pair(p1, 1, 0, 0, 1).q_half, 2);

  QPair t = make_product_pair(p1, 1, 1, 0, 1);
  EXPECT_EQ(t.u1, (U(1, Family::TypeI) * U(2, Family::TypeI)).scaled(LaurentScalar::q_pow(-1)));
  EXPECT_EQ(t.u2, U(2, Family::TypeI));
  EXPECT_EQ(t.q_half, 2);

  QPair t3 = make_product_pair(QPair::generators(Family::TypeIII), 2, 0, 0, 2);
  EXPECT_EQ(t3.u1, pow(U(1, Family::TypeIII), 2));
  EXPECT_EQ(t3.q_half, 8);
  EXPECT_EQ(t3.nd_parameter(), r * r);
  EXPECT_EQ(failures(check_pair(t3)), "");
}

TEST(ProductPair, TypeThreeRejectsOffDiagonal) {
  const QPair p = QPair::generators(Family::TypeIII);
  for (auto [n, m, s, t] : {std::array{2, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 2}}) {
    try {
      make_product_pair(p, n, m, s, t);
      ADD_FAILURE() << "no error";
    } catch (const AlgebraError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedTransform);
    }
  }
}

TEST(ProductPair, TypeOnePrefactorRestoresUnitDiagonal) {
  const QPair p = QPair::generators(Family::TypeI);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      QPair t = make_product_pair(p, n, m, 0, 1);
      EXPECT_TRUE((t.u1.a11 * t.u1.a22).as_scalar().has_value());
      EXPECT_EQ(t.u1.a11 * t.u1.a22, Element::one(Family::TypeI)) << n << "," << m;
    }
}

TEST(ProductPair, DiagonalMutualExchangeFactors) {
  // alpha(n,m) alpha(s,t) = q^{nt-ms} alpha(s,t) alpha(n,m) and likewise for gamma.
  for (Family f : {Family::TypeI, Family::TypeII}) {
    for (auto [n, m, s, t] : {std::array{2, 1, 1, 1}, {1, -2, 3, 0}, {-1, 3, 2, -2}, {3, 3, -3, 1}}) {
      const UTMatrix x = closed_product_entries(n, m, f), y = closed_product_entries(s, t, f);
      const auto factor = LaurentScalar::q_pow(2 * (n * t - m * s));
      EXPECT_EQ(x.a11 * y.a11, (y.a11 * x.a11).scaled(factor));
      EXPECT_EQ(x.a22 * y.a22, (y.a22 * x.a22).scaled(factor));
    }
  }
}

TEST(Theorem1, AllFamilies) {
  EXPECT_EQ(failures(verify_theorem1(Family::TypeI, 3)), "");
  EXPECT_EQ(failures(verify_theorem1(Family::TypeII, 3)), "");
  auto iii = verify_theorem1(Family::TypeIII, 3);
  EXPECT_EQ(iii.size(), 7u);
  EXPECT_EQ(failures(iii), "");
}

TEST(Theorem2, DocumentedExamples) {
  const QPair p2 = QPair::generators(Family::TypeII);
  QPair t = make_product_pair(p2, 1, 0, 1, 1);
  EXPECT_EQ(t.q_half, 2);
  EXPECT_EQ(failures(check_pair(t)), "");

  for (Family f : kFamilies) EXPECT_EQ(failures(check_pair(make_product_pair(QPair::generators(f), 1, 0, 0, 1))), "");

  QPair t1 = make_product_pair(QPair::generators(Family::TypeI), 2, 1, 1, 1);
  EXPECT_EQ(t1.q_half, 2);
  EXPECT_EQ(failures(check_pair(t1)), "");
}

TEST(Theorem2, SmallGrid) {
  EXPECT_EQ(failures(verify_theorem2(Family::TypeI, 1)), "");
  EXPECT_EQ(failures(verify_theorem2(Family::TypeII, 1)), "");
  EXPECT_EQ(failures(verify_theorem2(Family::TypeIII, 3)), "");
  EXPECT_EQ(verify_theorem2(Family::TypeII, 1).size(), 81u);
}

TEST(Prop2, TypeOneDiagonalTable) {
  auto rep = verify_prop2(4);
  EXPECT_EQ(rep.records.size(), 3u * 64u);
  EXPECT_EQ(failures(rep), "");
  const Family I = Family::TypeI;
  EXPECT_EQ(Element::generator(Gen::A1, 1, I) * Element::generator(Gen::G2, 1, I),
            (Element::generator(Gen::G2, 1, I) * Element::generator(Gen::A1, 1, I)).scaled(LaurentScalar::q_pow(-2)));
}

TEST(Rescale, DocumentedExamples) {
  const QPair p3 = QPair::generators(Family::TypeIII);
  EXPECT_EQ(rescale_pair(p3, 1, 1), p3);
  EXPECT_EQ(failures(check_pair(rescale_pair(p3, q, r))), "");
  EXPECT_EQ(failures(check_pair(rescale_pair(QPair::generators(Family::TypeI), LaurentScalar::q_pow(1), 1))), "");
  try {
    rescale_pair(p3, 1 + r, 1);
    ADD_FAILURE() << "no error";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnitScalar);
  }
}

TEST(Report, JsonLinesShape) {
  RelationReport rep = check_mutual(QPair::generators(Family::TypeII), 4);
  rep.suite = "mutual";
  rep.params = {1, 2, 3, 4};
  std::string lines = json_lines({rep});
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 6);
  auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
  EXPECT_EQ(first["suite"], "mutual");
  EXPECT_EQ(first["family"], "II");
  EXPECT_EQ(first["params"]["t"], 4);
  EXPECT_EQ(first["relation"], "MD:A1A2=qA2A1");
  EXPECT_EQ(first["status"], "violated");
  EXPECT_EQ(first["expected"], false);
  EXPECT_EQ(json_lines({rep}), lines);
}
