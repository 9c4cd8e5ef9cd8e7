#include <gtest/gtest.h>

#include "ratroot/errors.hpp"
#include "ratroot/unipoly.hpp"
#include "support.hpp"

using namespace ratroot;
using ratroot::testing::q;
using ratroot::testing::Rng;

namespace {
const UniPoly kEx3Composition{-30, -18, 18, -1, 3, -3, 1};
}

TEST(UniPoly, TrimAndDegree) {
  EXPECT_EQ(UniPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(UniPoly({0, 0}).is_zero());
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ(UniPoly({1, 2, 3})(Rational(2)), Rational(17));
}

TEST(UniPoly, ToString) {
  EXPECT_EQ(UniPoly({5, 3, -3, 1}).to_string(), "x^3 - 3*x^2 + 3*x + 5");
  EXPECT_EQ(UniPoly({q(-1, 2), 0, 1}).to_string("t"), "t^2 - 1/2");
  EXPECT_EQ(UniPoly().to_string(), "0");
}

TEST(PolyDivmod, Examples) {
  auto r = poly_divmod(UniPoly{-2, 0, 1}, UniPoly{-1, 1});
  EXPECT_EQ(r.quotient, (UniPoly{1, 1}));
  EXPECT_EQ(r.remainder, UniPoly::constant(-1));

  r = poly_divmod(UniPoly{3, 0, 0, 0, 0, 0, 1}, UniPoly{3, 0, 0, 1});
  EXPECT_EQ(r.quotient, (UniPoly{-3, 0, 0, 1}));
  EXPECT_EQ(r.remainder, UniPoly::constant(12));

  r = poly_divmod(kEx3Composition, kEx3Composition);
  EXPECT_EQ(r.quotient, UniPoly::constant(1));
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(PolyDivmod, ByZeroThrows) {
  EXPECT_THROW(poly_divmod(UniPoly{1, 1}, UniPoly()), InputError);
}

TEST(PolyDivmod, ReconstructionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const UniPoly a = rng.poly(static_cast<int>(rng.uniform(0, 7)), -9, 9, false);
    UniPoly b = rng.poly(static_cast<int>(rng.uniform(0, 4)), -9, 9, false);
    b *= Rational(1, static_cast<unsigned long>(rng.uniform(1, 5)));
    const auto r = poly_divmod(a, b);
    EXPECT_EQ(b * r.quotient + r.remainder, a);
    EXPECT_LT(r.remainder.degree(), b.degree());
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(UniPoly{-1, 0, 1}, UniPoly{-1, 1}), (UniPoly{-1, 1}));
  const UniPoly f{3, 0, 0, 0, 0, 0, 1};
  EXPECT_EQ(poly_gcd(f, f.derivative()), UniPoly::constant(1));
  EXPECT_EQ(poly_gcd(kEx3Composition, UniPoly{-6, 0, 0, 1}), (UniPoly{-6, 0, 0, 1}));
  EXPECT_THROW(poly_gcd(UniPoly(), UniPoly()), InputError);
  EXPECT_EQ(poly_gcd(UniPoly(), UniPoly{2, 4}), (UniPoly{q(1, 2), 1}));
}

TEST(PolyGcd, DividesBothAndMonic) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly common = rng.poly(static_cast<int>(rng.uniform(0, 3)), -4, 4, true);
    const UniPoly a = common * rng.poly(static_cast<int>(rng.uniform(0, 3)), -4, 4, false);
    const UniPoly b = common * rng.poly(static_cast<int>(rng.uniform(0, 3)), -4, 4, false);
    const UniPoly g = poly_gcd(a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(poly_divides(g, a));
    EXPECT_TRUE(poly_divides(g, b));
    EXPECT_TRUE(poly_divides(common, g));
  }
}

TEST(PolyXgcd, BezoutIdentity) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly a = rng.poly(static_cast<int>(rng.uniform(1, 5)), -5, 5, false);
    const UniPoly b = rng.poly(static_cast<int>(rng.uniform(1, 5)), -5, 5, false);
    const auto r = poly_xgcd(a, b);
    EXPECT_EQ(r.s * a + r.t * b, r.gcd);
    EXPECT_EQ(r.gcd, poly_gcd(a, b));
  }
}

TEST(PolyCompose, Examples) {
  const UniPoly x2{0, 0, 1};
  EXPECT_EQ(poly_compose(UniPoly{3, 0, 0, 1}, x2), (UniPoly{3, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(poly_compose(UniPoly{-11, 21, 3, 1}, UniPoly{-1, -1, 1}), kEx3Composition);
  EXPECT_EQ(poly_compose(UniPoly{-7, -2, 1}, UniPoly{1, -4, 0, 1}),
            (UniPoly{-8, 0, 16, 0, -8, 0, 1}));
}

TEST(PolyCompose, AgreesWithPointEvaluation) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly f = rng.poly(static_cast<int>(rng.uniform(0, 4)), -5, 5, false);
    const UniPoly p = rng.poly(static_cast<int>(rng.uniform(0, 3)), -5, 5, false);
    const UniPoly c = poly_compose(f, p);
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(c(Rational(x)), f(p(Rational(x))));
  }
}

TEST(PolyPow, Binomial) {
  EXPECT_EQ(poly_pow(UniPoly{1, 1}, 3), (UniPoly{1, 3, 3, 1}));
  EXPECT_EQ(poly_pow(UniPoly{1, 1}, 0), UniPoly::constant(1));
}

TEST(CanonicalOrder, DegreeThenCoefficients) {
  EXPECT_TRUE(canonical_less(UniPoly{5, 1}, UniPoly{-2, 0, 1}));
  EXPECT_TRUE(canonical_less(UniPoly{-6, 0, 0, 1}, UniPoly{5, 3, -3, 1}));
  EXPECT_FALSE(canonical_less(UniPoly{5, 3, -3, 1}, UniPoly{-6, 0, 0, 1}));
}

TEST(UniPoly, ConstructorCanonicalizesCoefficients) {
  const UniPoly a{Rational(8, 4), Rational(0, 5), Rational(6, 3)};
  EXPECT_EQ(a, (UniPoly{2, 0, 2}));
  EXPECT_EQ(UniPoly({Rational(0, 3)}).degree(), -1);
}
