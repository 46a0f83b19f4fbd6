#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "origami/realalg.hpp"
#include "test_support.hpp"

using namespace origami;
using origami::testing::ip;

namespace {

AlgebraicReal R(long n, long d = 1) { return AlgebraicReal(make_rational(n, d)); }
const AlgebraicReal kSqrt2 = sqrt(R(2));
const AlgebraicReal kSqrt3 = sqrt(R(3));
const AlgebraicReal kCbrt2 = cbrt_real(R(2));

long double to_ld(const AlgebraicReal& a) { return approximate(a, Rational(1) / Rational(Integer("1000000000000"))).get_d(); }

}  // namespace

TEST(FromRational, LinearMinpoly) {
  EXPECT_EQ(R(0).min_poly(), ip({0, 1}));
  EXPECT_EQ(R(2, 3).min_poly(), ip({-2, 3}));
  EXPECT_EQ(R(-5).min_poly(), ip({5, 1}));
  EXPECT_EQ(R(7, 2).degree(), 1);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(kSqrt2 * kSqrt2, R(2));
  AlgebraicReal s = kSqrt2 + kSqrt3;
  EXPECT_EQ(s.min_poly(), ip({1, 0, -10, 0, 1}));
  EXPECT_EQ(s.degree(), 4);
  EXPECT_EQ(kCbrt2 * R(1), kCbrt2);
  EXPECT_EQ(kSqrt2 - kSqrt2, R(0));
  EXPECT_EQ(kSqrt2 / kSqrt2, R(1));
  EXPECT_THROW(kSqrt2 / R(0), Error);
  EXPECT_EQ((kSqrt2 - R(1)) * (kSqrt2 + R(1)), R(1));
}

TEST(Sqrt, Examples) {
  EXPECT_EQ(sqrt(R(4)), R(2));
  EXPECT_EQ(kSqrt2.min_poly(), ip({-2, 0, 1}));
  EXPECT_GT(kSqrt2, R(1));
  EXPECT_LT(kSqrt2, R(3, 2));
  EXPECT_EQ(sqrt(kSqrt2).min_poly(), ip({-2, 0, 0, 0, 1}));
  EXPECT_EQ(sqrt(R(0)), R(0));
  EXPECT_THROW(sqrt(R(-1)), Error);
  try {
    sqrt(-kSqrt2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
  }
}

TEST(Cbrt, Examples) {
  EXPECT_EQ(cbrt_real(R(8)), R(2));
  EXPECT_EQ(kCbrt2.min_poly(), ip({-2, 0, 0, 1}));
  AlgebraicReal neg = cbrt_real(R(-2));
  EXPECT_EQ(neg.min_poly(), ip({2, 0, 0, 1}));
  EXPECT_EQ(neg, -kCbrt2);
  EXPECT_EQ(cbrt_real(R(-27, 8)), R(-3, 2));
}

TEST(RootOf, Examples) {
  EXPECT_EQ(root_of({R(-2), R(0), R(0), R(1)}, {1, 2}), kCbrt2);
  EXPECT_EQ(root_of({R(-2), R(0), R(1)}, {1, 2}), kSqrt2);
  AlgebraicReal sixth = root_of({-kSqrt2, R(0), R(0), R(1)}, {1, 2});
  EXPECT_EQ(sixth.min_poly(), ip({-2, 0, 0, 0, 0, 0, 1}));
}

TEST(RootOf, HintErrors) {
  try {
    root_of({R(-2), R(0), R(1)}, {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HintNotIsolating);
  }
  EXPECT_THROW(root_of({R(-1), R(0), R(1)}, {-2, 2}), Error);
}

TEST(RootOf, AlgebraicCoefficientsKeepOnlyGenuineRoots) {
  // x^2 - (sqrt2 + sqrt3) x + sqrt6 = (x - sqrt2)(x - sqrt3); its norm has eight roots.
  auto roots = real_roots({kSqrt2 * kSqrt3, -(kSqrt2 + kSqrt3), R(1)});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], kSqrt2);
  EXPECT_EQ(roots[1], kSqrt3);
}

TEST(Ordering, Examples) {
  EXPECT_EQ(compare(kSqrt2, R(141421356, 100000000)), std::strong_ordering::greater);
  EXPECT_TRUE(is_equal(kSqrt2 * kSqrt3, sqrt(R(6))));
  EXPECT_EQ(compare(kCbrt2, kSqrt2), std::strong_ordering::less);
  EXPECT_EQ(sign(kSqrt2 - R(141421356, 100000000)), 1);
  EXPECT_EQ(sign(R(0)), 0);
  EXPECT_EQ(sign(-kCbrt2), -1);
}

TEST(Approximate, Examples) {
  // Oracles: std::cbrt and std::sqrt in double precision.
  Rational eps(1, 1000000);
  EXPECT_NEAR(approximate(kCbrt2, eps).get_d(), std::cbrt(2.0), 1e-6);
  EXPECT_EQ(approximate(R(1, 3), Rational(1, 1000000000)), Rational(1, 3));
  EXPECT_NEAR(approximate(kSqrt2 + kSqrt3, eps).get_d(), std::sqrt(2.0) + std::sqrt(3.0), 1e-6);
  EXPECT_THROW(approximate(kSqrt2, 0), Error);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(kCbrt2), 3);
  EXPECT_EQ(degree(R(7, 2)), 1);
  EXPECT_EQ(degree(kSqrt2 + kSqrt3), 4);
}

TEST(Display, TextAndCanonicalInterval) {
  EXPECT_EQ(to_string(kCbrt2), "1.259921 (root of x^3-2 in (1,2))");
  EXPECT_EQ(to_string(R(7, 2)), "7/2");
  EXPECT_EQ(kSqrt2.interval(), (RootInterval{1, 2}));
  // Two roots of x^2 - 2 x - 1 (1 +- sqrt2) land in distinct canonical cells.
  EXPECT_EQ((R(1) + kSqrt2).interval(), (RootInterval{2, 3}));
  EXPECT_EQ((R(1) - kSqrt2).interval(), (RootInterval{-1, 0}));
}

namespace {

/// Small values of degree <= 4 from rationals, square roots and real cube roots.
AlgebraicReal random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(1, 7), num(-9, 9);
  switch (rng() % 5) {
    case 0: return R(num(rng), small(rng));
    case 1: return sqrt(R(small(rng) + 1));
    case 2: return cbrt_real(R(num(rng) == 0 ? 3 : num(rng)));
    case 3: return R(num(rng)) + R(small(rng)) * sqrt(R(small(rng) + 1));
    default: return sqrt(R(2)) + sqrt(R(3 + 2 * (small(rng) % 3)));
  }
}

}  // namespace

TEST(FieldProperties, AxiomsOnRandomInputs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 12; ++i) {
    AlgebraicReal a = random_value(rng), b = random_value(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + (-a), R(0));
    if (sign(a) != 0) { EXPECT_EQ(a * (R(1) / a), R(1)); }
    AlgebraicReal c = random_value(rng);
    if (a.degree() * b.degree() * c.degree() <= 12) {
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(FieldProperties, RootsInvertPowers) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10; ++i) {
    AlgebraicReal a = random_value(rng);
    if (sign(a) >= 0) { EXPECT_EQ(pow(sqrt(a), 2), a) << to_string(a); }
    EXPECT_EQ(pow(cbrt_real(a), 3), a) << to_string(a);
  }
}

TEST(Invariants, MinpolyIrreducibleAndSignChangeOnInterval) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    AlgebraicReal a = random_value(rng);
    EXPECT_TRUE(is_irreducible(a.min_poly()));
    const RootInterval& iv = a.interval();
    if (iv.pinned()) {
      EXPECT_EQ(sign_at(a.min_poly(), iv.low), 0);
    } else {
      EXPECT_EQ(sign_at(a.min_poly(), iv.low) * sign_at(a.min_poly(), iv.high), -1);
      EXPECT_EQ(sturm_count(a.min_poly(), iv), 1);
    }
  }
}

TEST(Invariants, ApproximationsNestAndAgreeWithOrder) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 20; ++i) {
    AlgebraicReal a = random_value(rng), b = random_value(rng);
    RootInterval coarse = a.refined(Rational(1, 100)), fine = a.refined(Rational(1, 100000));
    EXPECT_LE(coarse.low, fine.low);
    EXPECT_GE(coarse.high, fine.high);
    Rational q = approximate(a, Rational(1, 1000));
    EXPECT_TRUE(a.interval().low <= q && q <= a.interval().high);
    auto ord = compare(a, b);
    long double da = to_ld(a), db = to_ld(b);
    if (ord == std::strong_ordering::less) { EXPECT_LT(da, db); }
    if (ord == std::strong_ordering::greater) { EXPECT_GT(da, db); }
    if (ord == std::strong_ordering::equal) {
      EXPECT_NEAR(static_cast<double>(da), static_cast<double>(db), 1e-9);
    }
  }
}
