#include <gtest/gtest.h>

#include <random>

#include "riley/exactpoly.hpp"

using namespace riley;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  const int d = deg(rng);
  std::vector<BigInt> c(d + 1);
  for (auto& v : c) v = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST(IntPoly, ZeroAndDegree) {
  IntPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(IntPoly({0, 0, 0}), z);
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1);
  EXPECT_THROW(z.lead(), std::domain_error);
  EXPECT_EQ(z.lead_sign(), Sign::zero);
}

TEST(IntPoly, RingOps) {
  const IntPoly x1{1, 1};
  EXPECT_EQ(x1 * x1 + IntPoly::x(), (IntPoly{1, 3, 1}));
  EXPECT_EQ(x1 + IntPoly{}, x1);
  EXPECT_EQ(x1 - x1, IntPoly{});
  EXPECT_EQ(-x1, (IntPoly{-1, -1}));
  EXPECT_EQ(BigInt(3) * x1, (IntPoly{3, 3}));
  EXPECT_EQ(BigInt(0) * x1, IntPoly{});
  EXPECT_EQ(shift(x1, 2), (IntPoly{0, 0, 1, 1}));
  EXPECT_EQ(derivative(IntPoly{1, -1, 1}), (IntPoly{-1, 2}));
  EXPECT_EQ(derivative(IntPoly{7}), IntPoly{});
}

TEST(IntPoly, Evaluate) {
  const IntPoly f{1, 3, 1};
  EXPECT_EQ(evaluate(f, BigInt(-1)), -1);
  EXPECT_DOUBLE_EQ(evaluate(f, 2.0), 11.0);
  EXPECT_EQ(sign_at(IntPoly{1, -1, 1}, Rational(1, 2)), Sign::positive);
  EXPECT_EQ(sign_at(IntPoly{1, 1}, Rational(-1)), Sign::zero);
  EXPECT_EQ(sign_at(f, Rational(-1)), Sign::negative);
  EXPECT_EQ(sign_at(f, Rational(-1, 3)), Sign::positive);  // 1 - 1 + 1/9
  EXPECT_EQ(sign_at(f, Rational(-2, 5)), Sign::negative);  // 1 - 6/5 + 4/25
}

TEST(IntPoly, HomogeneousValueMatchesRationalEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly f = random_poly(rng, 8, 30);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    Rational v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * r + Rational(f[i]);
    EXPECT_EQ(sign_at(f, r), sign_of(v)) << to_string(f) << " at " << r.get_str();
  }
}

TEST(IntPoly, SignAtInfinity) {
  EXPECT_EQ(sign_at_infinity(IntPoly{1, 1}, Infinity::plus), Sign::positive);
  EXPECT_EQ(sign_at_infinity(IntPoly{1, 1}, Infinity::minus), Sign::negative);
  EXPECT_EQ(sign_at_infinity(IntPoly{1, -1, 1}, Infinity::minus), Sign::positive);
  EXPECT_EQ(sign_at_infinity(IntPoly{-4}, Infinity::minus), Sign::negative);
  EXPECT_THROW(sign_at_infinity(IntPoly{}, Infinity::plus), std::domain_error);
}

TEST(IntPoly, CauchyBound) {
  EXPECT_EQ(cauchy_bound(IntPoly{1, 3, 1}), 4);
  EXPECT_EQ(cauchy_bound(IntPoly{1, 1}), 2);
  EXPECT_EQ(cauchy_bound(IntPoly{5}), 1);
  EXPECT_EQ(cauchy_bound(IntPoly{1, 0, 2}), Rational(3, 2));
  EXPECT_THROW(cauchy_bound(IntPoly{}), std::domain_error);
}

TEST(IntPoly, RootBoundsContainIntegerRoots) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-30, 30);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly f{1};
    std::vector<long> roots;
    for (int i = 0; i < 5; ++i) {
      roots.push_back(root(rng));
      f = f * IntPoly{-roots.back(), 1};
    }
    const Rational c = cauchy_bound(f), d = dyadic_root_bound(f);
    for (long r : roots) {
      EXPECT_LT(std::abs(r), c);
      EXPECT_LT(std::abs(r), d);
    }
  }
}

TEST(IntPoly, ContentAndPrimitivePart) {
  EXPECT_EQ(content(IntPoly{6, -4, 2}), 2);
  EXPECT_EQ(primitive_part(IntPoly{6, -4, 2}), (IntPoly{3, -2, 1}));
  EXPECT_EQ(primitive_part(IntPoly{-6, 4, -2}), (IntPoly{3, -2, 1}));
}

TEST(IntPoly, Gcd) {
  EXPECT_EQ(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}), (IntPoly{1, 1}));
  EXPECT_EQ(gcd(IntPoly{1, -1, 1}, IntPoly{-1, 2}), IntPoly{1});
  EXPECT_EQ(gcd(IntPoly{4, 6, 2}, IntPoly{}), (IntPoly{2, 3, 1}));
  EXPECT_EQ(gcd(IntPoly{}, IntPoly{-3, 6}), (IntPoly{-1, 2}));
  EXPECT_THROW(gcd(IntPoly{}, IntPoly{}), std::domain_error);
}

TEST(IntPoly, GcdProperties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly common = random_poly(rng, 3, 6);
    const IntPoly f = common * random_poly(rng, 4, 9);
    const IntPoly g = common * random_poly(rng, 4, 9);
    const IntPoly h = gcd(f, g);
    ASSERT_TRUE(divides(h, f).has_value());
    ASSERT_TRUE(divides(h, g).has_value());
    EXPECT_TRUE(divides(primitive_part(common), h).has_value());
    EXPECT_EQ(h.lead_sign(), Sign::positive);
    EXPECT_EQ(content(h), 1);
  }
}

TEST(IntPoly, Squarefree) {
  EXPECT_TRUE(is_squarefree(IntPoly{1, 3, 1}));
  EXPECT_FALSE(is_squarefree(IntPoly{1, 2, 1}));
  EXPECT_TRUE(is_squarefree(IntPoly{1, 1}));
  EXPECT_THROW(is_squarefree(IntPoly{}), std::domain_error);
}

TEST(IntPoly, Divides) {
  EXPECT_EQ(divides(IntPoly{1, 1}, IntPoly{-1, 0, 1}), (IntPoly{-1, 1}));
  EXPECT_FALSE(divides(IntPoly{1, 1}, IntPoly{1, 0, 1}).has_value());
  const IntPoly f{1, 3, 1};
  EXPECT_EQ(divides(f, f), IntPoly{1});
  EXPECT_EQ(divides(f, IntPoly{}), IntPoly{});
  EXPECT_FALSE(divides(IntPoly{0, 2}, IntPoly{0, 1}).has_value());  // not over Z
  EXPECT_THROW(divides(IntPoly{}, f), std::domain_error);
}

TEST(IntPoly, Formatting) {
  EXPECT_EQ(to_string(IntPoly{1, 1}), "1 + x");
  EXPECT_EQ(to_string(IntPoly{1, -1, 1}), "1 - x + x^2");
  EXPECT_EQ(to_string(IntPoly{0, -2, 0, 3}), "-2*x + 3*x^3");
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(coefficient_strings(IntPoly{1, 3, 1}), (std::vector<std::string>{"1", "3", "1"}));
}
