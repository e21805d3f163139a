#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "riley/riley.hpp"

using namespace riley;

namespace {

IntPoly from_strings(const std::vector<std::string>& cs) {
  std::vector<BigInt> v;
  for (const auto& s : cs) v.emplace_back(s);
  return IntPoly(std::move(v));
}

}  // namespace

TEST(Riley, MatchesOracleTable) {
  for (const auto& o : oracle::knots()) {
    const Fraction k{o.p, o.q};
    const auto r = verify_conjecture(k);
    EXPECT_EQ(r.lambda, from_strings(o.lambda)) << to_string(k);
    EXPECT_EQ(r.sigma, o.sigma) << to_string(k);
    EXPECT_EQ(r.real_root_count, o.real_roots) << to_string(k);
    EXPECT_EQ(r.squarefree, o.squarefree) << to_string(k);
    EXPECT_TRUE(r.satisfied) << to_string(k);
  }
}

TEST(Riley, HandSteps) {
  auto rs = riley_sequence(sign_sequences({3, 1}));
  EXPECT_EQ(rs.a, (std::vector<IntPoly>{IntPoly{1}, IntPoly{1, 1}}));
  EXPECT_EQ(rs.b, (std::vector<IntPoly>{IntPoly{}, IntPoly{1}}));
  EXPECT_EQ(rs.c[1], (IntPoly{0, 1}));

  rs = riley_sequence(sign_sequences({5, 1}));
  EXPECT_EQ(rs.a[2], (IntPoly{1, 3, 1}));
  EXPECT_EQ(rs.b[2], (IntPoly{2, 1}));
  EXPECT_EQ(rs.c[2], (IntPoly{0, 2, 1}));

  rs = riley_sequence(sign_sequences({5, 3}));
  EXPECT_EQ(rs.a[2], (IntPoly{1, -1, 1}));

  rs = riley_sequence(sign_sequences({7, 1}));
  EXPECT_EQ(rs.a[3], (IntPoly{1, 6, 5, 1}));
}

TEST(Riley, StructureAndDeterminant) {
  for (const auto& k : enumerate(61)) {
    const auto sd = sign_sequences(k);
    const auto rs = riley_sequence(sd, Checks::full);
    int eta_prefix = 1;
    for (int j = 0; j <= sd.n; ++j) {
      if (j > 0) eta_prefix *= sd.eta[j - 1];
      EXPECT_EQ(rs.a[j].degree(), j);
      EXPECT_EQ(rs.a[j].lead(), sd.mu[j] * eta_prefix);
      EXPECT_EQ(rs.a[j][0], 1);
      EXPECT_EQ(rs.a[j] * rs.d[j] - rs.b[j] * rs.c[j], IntPoly{1});
    }
  }
}

TEST(Riley, SixtyNineOverTwentyNine) {
  const auto lambda = riley_polynomial(Fraction{69, 29});
  EXPECT_EQ(lambda.degree(), 34);
  EXPECT_EQ(lambda[0], 1);
  const auto r = verify_conjecture({69, 29});
  EXPECT_EQ(r.sigma, 0);
  EXPECT_EQ(r.bound, 0);
  EXPECT_GE(r.real_root_count, 1);
  EXPECT_TRUE(r.satisfied);
}

TEST(Riley, MirrorHasSameLambda) {
  for (const auto& k : enumerate(41))
    EXPECT_EQ(riley_polynomial(k), riley_polynomial(Fraction{k.p, -k.q})) << to_string(k);
}

TEST(Riley, FSequence) {
  auto sd = sign_sequences({3, 1});
  auto f = f_sequence(sd, riley_sequence(sd));
  EXPECT_EQ(f, (std::vector<IntPoly>{IntPoly{1}, IntPoly{1, 1}}));
  sd = sign_sequences({5, 3});
  f = f_sequence(sd, riley_sequence(sd));
  EXPECT_EQ(f, (std::vector<IntPoly>{IntPoly{1}, IntPoly{-1, 1}, IntPoly{-1, 1, -1}}));
  for (const auto& k : enumerate(31)) {
    sd = sign_sequences(k);
    EXPECT_EQ(f_sequence(sd, riley_sequence(sd)).front(), IntPoly{1});
  }
}

TEST(Riley, Bound) {
  EXPECT_EQ(conjecture_bound(sign_sequences({3, 1})), 1);
  EXPECT_EQ(conjecture_bound(sign_sequences({5, 3})), 0);
  EXPECT_EQ(conjecture_bound(sign_sequences({5, 1})), 2);
  const auto id = bound_identities(sign_sequences({3, 1}));
  EXPECT_EQ(id.var_minus_inf, 1);
  EXPECT_EQ(id.var_plus_inf, 0);
  for (const auto& k : enumerate(99)) {
    const auto sd = sign_sequences(k);
    EXPECT_EQ(2 * conjecture_bound(sd), std::abs(signature(sd)));
  }
}

TEST(Riley, VerifyConjecture) {
  auto r = verify_conjecture({3, 1});
  EXPECT_EQ(r.real_root_count, 1);
  EXPECT_EQ(r.bound, 1);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_TRUE(r.roots[0].contains(-1));
  r = verify_conjecture({5, 1});
  EXPECT_EQ(r.real_root_count, 2);
  EXPECT_EQ(r.bound, 2);
  r = verify_conjecture({5, 1}, true, Rational(1, 1 << 30));
  for (const auto& I : r.roots) EXPECT_LE(I.width(), Rational(1, 1 << 30));
}

TEST(Riley, SignLawAtInteriorRoots) {
  auto sd = sign_sequences({5, 1});
  auto rep = lemma31_check(riley_sequence(sd), sd);
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].k, 1);
  EXPECT_TRUE(rep.entries[0].root.contains(-1));
  EXPECT_EQ(rep.entries[0].prev, Sign::positive);
  EXPECT_EQ(rep.entries[0].next, Sign::negative);
  EXPECT_EQ(rep.entries[0].expected, -1);

  sd = sign_sequences({3, 1});
  EXPECT_TRUE(lemma31_check(riley_sequence(sd), sd).entries.empty());

  sd = sign_sequences({7, 1});
  rep = lemma31_check(riley_sequence(sd), sd);
  int at_two = 0;
  for (const auto& e : rep.entries) at_two += e.k == 2;
  EXPECT_EQ(at_two, 2);
}

TEST(Riley, SignLawDetectsBrokenSigns) {
  // Feeding the wrong eta must trip the sign law somewhere.
  auto sd = sign_sequences({7, 1});
  const auto rs = riley_sequence(sd);
  sd.eta[1] = -sd.eta[1];
  EXPECT_THROW(lemma31_check(rs, sd), invariant_error);
}

TEST(Riley, CertifyParabolic) {
  auto cert = certify_parabolic(riley_sequence(sign_sequences({3, 1})));
  EXPECT_TRUE(cert.e22.is_zero());
  cert = certify_parabolic(riley_sequence(sign_sequences({5, 1})));
  EXPECT_TRUE(cert.e22.is_zero());
  for (const auto& k : enumerate(41)) EXPECT_NO_THROW(certify_parabolic(riley_sequence(sign_sequences(k))));
}

TEST(Riley, ParabolicNumericSpotCheck) {
  // W A - X W at x = -1 for the trefoil, in floating point.
  const auto rs = riley_sequence(sign_sequences({3, 1}));
  const double x = -1.0;
  const double a = evaluate(rs.a[1], x), b = evaluate(rs.b[1], x), c = evaluate(rs.c[1], x),
               d = evaluate(rs.d[1], x);
  const double e[4] = {a - a, (a + b) - b, c - (x * a + c), (c + d) - (x * b + d)};
  for (double v : e) EXPECT_LT(std::abs(v), 1e-12);
}
