#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "riley/sturm.hpp"

using namespace riley;

namespace {

// Equal up to a positive constant factor.
bool positive_multiple(const IntPoly& f, const IntPoly& g) {
  return primitive_part(f) == primitive_part(g) && f.lead_sign() == g.lead_sign();
}

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly f{1};
  for (long r : roots) f = f * IntPoly{-r, 1};
  return f;
}

}  // namespace

TEST(Sturm, Sequences) {
  auto s = sturm_sequence(IntPoly{1, 3, 1});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(positive_multiple(s[1], IntPoly{3, 2}));
  EXPECT_TRUE(positive_multiple(s[2], IntPoly{5}));

  s = sturm_sequence(IntPoly{1, 1});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(positive_multiple(s[1], IntPoly{1}));

  s = sturm_sequence(IntPoly{1, -1, 1});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(positive_multiple(s[1], IntPoly{-1, 2}));
  EXPECT_TRUE(positive_multiple(s[2], IntPoly{-3}));

  EXPECT_THROW(sturm_sequence(IntPoly{}), std::domain_error);
}

TEST(Sturm, Counts) {
  EXPECT_EQ(count_real_roots(IntPoly{1, 3, 1}), 2);
  EXPECT_EQ(count_real_roots(IntPoly{1, -1, 1}), 0);
  EXPECT_EQ(count_real_roots(IntPoly{1, 1}), 1);
  EXPECT_EQ(count_real_roots(IntPoly{7}), 0);
  // Multiple roots are counted once.
  EXPECT_EQ(count_real_roots(from_roots({2, 2, 2, -1})), 2);
  EXPECT_THROW(count_real_roots(IntPoly{}), std::domain_error);
}

TEST(Sturm, CountRootsIn) {
  const IntPoly f{1, 3, 1};
  EXPECT_EQ(count_roots_in(f, {-3, 0}), 2);
  EXPECT_EQ(count_roots_in(f, {-1, 0}), 1);
  EXPECT_EQ(count_roots_in(f, {0, 5}), 0);
  EXPECT_THROW(count_roots_in(IntPoly{1, 1}, {-1, 0}), std::domain_error);
  EXPECT_THROW(count_roots_in(f, {1, 0}), std::invalid_argument);
}

TEST(Sturm, Isolation) {
  auto roots = isolate_real_roots(IntPoly{1, 3, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LE(roots[0].hi, roots[1].lo);
  EXPECT_TRUE(roots[0].contains(Rational(-2618, 1000)) || roots[0].is_point());
  EXPECT_NEAR(refine(IntPoly{1, 3, 1}, roots[0], Rational(1, 1 << 20)).approx(), -2.6180339887, 1e-5);
  EXPECT_NEAR(refine(IntPoly{1, 3, 1}, roots[1], Rational(1, 1 << 20)).approx(), -0.3819660113, 1e-5);

  roots = isolate_real_roots(IntPoly{1, 1});
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].contains(-1));

  EXPECT_TRUE(isolate_real_roots(IntPoly{1, -1, 1}).empty());
  EXPECT_TRUE(isolate_real_roots(IntPoly{3}).empty());
  EXPECT_THROW(isolate_real_roots(IntPoly{}), std::domain_error);
}

TEST(Sturm, Refine) {
  EXPECT_EQ(refine(IntPoly{1, 1}, {-2, 0}, Rational(1)), (Interval{-1, -1}));
  const IntPoly f{1, 3, 1};
  const Interval I = refine(f, {-1, 0}, Rational(1, 1024));
  EXPECT_LE(I.width(), Rational(1, 1024));
  const double r = (-3.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_LE(I.lo.get_d(), r);
  EXPECT_GE(I.hi.get_d(), r);
  EXPECT_EQ(refine(f, {-1, 0}, Rational(2)), (Interval{-1, 0}));
  EXPECT_THROW(refine(f, {-3, 0}, Rational(1, 8)), std::domain_error);
  EXPECT_THROW(refine(f, {0, 1}, Rational(1, 8)), std::domain_error);
}

TEST(Sturm, DistinctIntegerRoots) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> root(-40, 40);
  std::uniform_int_distribution<int> size(1, 8), mult(1, 3);
  for (int trial = 0; trial < 150; ++trial) {
    std::set<long> distinct;
    std::vector<long> roots;
    const int m = size(rng);
    for (int i = 0; i < m; ++i) {
      const long r = root(rng);
      distinct.insert(r);
      for (int j = mult(rng); j > 0; --j) roots.push_back(r);
    }
    IntPoly f = from_roots(roots) * IntPoly{1, 0, 1};  // plus a complex pair
    EXPECT_EQ(count_real_roots(f), static_cast<int>(distinct.size()));
    const auto isolated = isolate_real_roots(f);
    ASSERT_EQ(isolated.size(), distinct.size());
    auto it = distinct.begin();
    for (const auto& I : isolated) {
      EXPECT_TRUE(I.contains(*it)) << to_string(I) << " vs " << *it;
      ++it;
    }
  }
}

TEST(Sturm, RandomPolynomialsAgreeWithIsolation) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    const IntPoly f(std::move(c));
    const SturmSequence s(f);
    const auto roots = isolate_real_roots(s);
    ASSERT_EQ(static_cast<int>(roots.size()), s.count_real_roots());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& I = roots[i];
      if (I.is_point()) {
        EXPECT_EQ(sign_at(f, I.lo), Sign::zero);
      } else {
        EXPECT_EQ(count_roots_in(s, I), 1);
      }
      if (i > 0) {
        EXPECT_LT(roots[i - 1].hi, I.hi);
        if (!I.is_point()) {
          EXPECT_LE(roots[i - 1].hi, I.lo);
        }
      }
    }
    // Positive scaling leaves the count unchanged; negation too.
    EXPECT_EQ(count_real_roots(BigInt(3) * f), s.count_real_roots());
    EXPECT_EQ(s.negated().count_real_roots(), s.count_real_roots());
  }
}

TEST(Sturm, SignAtIsolatedRoot) {
  const SturmSequence f(IntPoly{-2, 0, 1});  // roots +-sqrt 2
  auto roots = isolate_real_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  const SturmSequence g(IntPoly{-7, 5});  // 5x - 7 at sqrt 2 = 0.071...
  Interval pos = roots[1];
  EXPECT_EQ(sign_at_isolated_root(f, pos, g), Sign::positive);
  Interval neg = roots[0];
  EXPECT_EQ(sign_at_isolated_root(f, neg, g), Sign::negative);
  // Shared irrational root.
  const SturmSequence h(IntPoly{-2, 0, 1} * IntPoly{1, 1});
  Interval shared = roots[1];
  EXPECT_EQ(sign_at_isolated_root(f, shared, h), Sign::zero);
  // Non-squarefree g: its sign, not its squarefree part's.
  const SturmSequence sq(IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-1});  // -(x+1)^2
  Interval again = roots[1];
  EXPECT_EQ(sign_at_isolated_root(f, again, sq), Sign::negative);
}
