#include <gtest/gtest.h>

#include <algorithm>

#include "ratroot/errors.hpp"
#include "ratroot/numberfield.hpp"
#include "support.hpp"

using namespace ratroot;
using ratroot::testing::q;
using ratroot::testing::Rng;

namespace {

const UniPoly kX2m2{-2, 0, 1};
const UniPoly kEx5F{-7, -2, 1};
const UniPoly kEx5P{1, -4, 0, 1};

UniPoly random_irreducible(Rng& rng, int degree) {
  while (true) {
    const UniPoly f = rng.poly(degree, -6, 6, true);
    if (is_irreducible_over_Q(f)) return f;
  }
}

}  // namespace

TEST(NumberField, CertifiedRejectsReducible) {
  EXPECT_THROW(NumberField::certified(UniPoly{-1, 0, 1}), PreconditionError);
  EXPECT_THROW(NumberField::certified(UniPoly{-1, 2}), PreconditionError);  // not monic
  EXPECT_NO_THROW(NumberField::certified(kX2m2));
}

TEST(NumberField, ReductionAndArithmetic) {
  const auto k = NumberField::certified(kX2m2);
  const NFElement mu = k.generator();
  EXPECT_EQ(mu * mu, k.from_rational(2));
  EXPECT_EQ(k.element(UniPoly{0, 0, 0, 1}), k.element(UniPoly{0, 2}));
  EXPECT_EQ((mu + k.one()).coordinates(), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(k.zero().coordinates(), (std::vector<Rational>{0, 0}));
}

TEST(NfInv, Examples) {
  const auto k2 = NumberField::certified(kX2m2);
  EXPECT_EQ(nf_inv(k2.generator()), k2.element(UniPoly{0, q(1, 2)}));
  const auto k3 = NumberField::certified(UniPoly{3, 0, 0, 1});
  EXPECT_EQ(nf_inv(k3.one() + k3.generator()), k3.element(UniPoly{q(-1, 2), q(1, 2), q(-1, 2)}));
  EXPECT_EQ(nf_inv(k3.one()), k3.one());
  EXPECT_THROW(nf_inv(k3.zero()), InputError);
}

TEST(NfInv, RandomRoundTrip) {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = NumberField::trusted(random_irreducible(rng, static_cast<int>(rng.uniform(1, 5))));
    const NFElement x = k.element(rng.poly(static_cast<int>(k.degree()) - 1, -5, 5, false));
    EXPECT_EQ(x * nf_inv(x), k.one());
    EXPECT_EQ(x / x, k.one());
  }
}

TEST(NfPolyGcd, Examples) {
  const auto k = NumberField::certified(kX2m2);
  const NFPoly t2m2 = NFPoly::embed(k, kX2m2);
  const NFPoly t_minus_mu(k, {-k.generator(), k.one()});
  EXPECT_EQ(nf_poly_gcd(t2m2, t_minus_mu), t_minus_mu);

  const auto k5 = NumberField::certified(kEx5F);
  const NFPoly lhs = NFPoly::embed(k5, kX2m2);
  NFPoly rhs = NFPoly::embed(k5, kEx5P);
  rhs = rhs - NFPoly(k5, {k5.generator()});
  const NFElement gamma = k5.element(UniPoly{q(1, 2), q(-1, 2)});
  EXPECT_EQ(nf_poly_gcd(lhs, rhs), NFPoly(k5, {-gamma, k5.one()}));

  EXPECT_EQ(nf_poly_gcd(lhs, NFPoly(k5, {k5.one()})), NFPoly(k5, {k5.one()}));
  EXPECT_THROW(nf_poly_gcd(NFPoly(k5, {}), NFPoly(k5, {})), InputError);
}

TEST(AdmissibleGammas, Examples) {
  const UniPoly f{-11, 21, 3, 1};
  const auto id = admissible_gammas(f, UniPoly{0, 1});
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].rep(), (UniPoly{0, 1}));

  const auto g5 = admissible_gammas(kEx5F, kEx5P);
  ASSERT_EQ(g5.size(), 1u);
  EXPECT_EQ(g5[0].rep(), (UniPoly{q(1, 2), q(-1, 2)}));

  EXPECT_TRUE(admissible_gammas(UniPoly{3, 0, 0, 1}, UniPoly{0, 0, 1}).empty());
  EXPECT_THROW(admissible_gammas(UniPoly{-1, 0, 1}, UniPoly{0, 0, 1}), PreconditionError);
}

TEST(AdmissibleGammas, LiteralIdentityAndCount) {
  Rng rng(62);
  int nonempty = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const UniPoly f = random_irreducible(rng, n);
    // p(g(x)) = x mod f is forced by building f as the char poly of p(g).
    const UniPoly p = rng.poly(static_cast<int>(rng.uniform(1, 3)), -3, 3, false);
    const auto gammas = admissible_gammas(f, p);
    const auto fz = factor_over_Q(poly_compose(f, p));
    EXPECT_EQ(gammas.size(), fz.factors_of_degree(n).size());
    for (const auto& g : gammas) {
      EXPECT_EQ(poly_divmod(poly_compose(p, g.rep()), f).remainder,
                poly_divmod(UniPoly{0, 1}, f).remainder);
      const UniPoly h = char_poly_of_element(g);
      EXPECT_EQ(h.degree(), n);
      EXPECT_TRUE(poly_divides(h, poly_compose(f, p)));
    }
    if (!gammas.empty()) ++nonempty;
  }
  EXPECT_GT(nonempty, 0);
}

TEST(CharPolyOfElement, Examples) {
  const UniPoly f{-11, 21, 3, 1};
  const auto k = NumberField::certified(f);
  EXPECT_EQ(char_poly_of_element(k.generator()), f);
  EXPECT_EQ(char_poly_via_newton(k.generator()), f);

  const auto k5 = NumberField::certified(kEx5F);
  const NFElement g = k5.element(UniPoly{q(1, 2), q(-1, 2)});
  EXPECT_EQ(char_poly_of_element(g), kX2m2);
  EXPECT_EQ(char_poly_via_newton(g), kX2m2);

  const NFElement c = k.from_rational(q(5, 3));
  EXPECT_EQ(char_poly_of_element(c), poly_pow(UniPoly{q(-5, 3), 1}, 3));
  EXPECT_EQ(char_poly_via_newton(c), poly_pow(UniPoly{q(-5, 3), 1}, 3));
}

TEST(CharPolyOfElement, RoutesAgreeRandomly) {
  Rng rng(63);
  for (int trial = 0; trial < 80; ++trial) {
    const auto k = NumberField::trusted(random_irreducible(rng, static_cast<int>(rng.uniform(1, 5))));
    UniPoly rep = rng.poly(static_cast<int>(k.degree()) - 1, -3, 3, false);
    if (trial % 4 == 0) rep *= q(1, 2);
    const NFElement g = k.element(rep);
    EXPECT_EQ(char_poly_of_element(g), char_poly_via_newton(g));
  }
}

TEST(CharPolyOfElement, SpectralMapping) {
  // char_poly of p(g) recovers f when p(g) = mu.
  const auto k5 = NumberField::certified(kEx5F);
  const NFElement g = k5.element(UniPoly{q(1, 2), q(-1, 2)});
  EXPECT_EQ(char_poly_of_element(nf_eval(kEx5P, g)), kEx5F);
}

TEST(Newton, ExampleOneIdentitiesOnCubics) {
  Rng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly f = rng.poly(3, -7, 7, true);
    // e_j from coefficients: f = x^3 - e1 x^2 + e2 x - e3.
    const Rational e1 = -f.coeff(2), e2 = f.coeff(1), e3 = -f.coeff(0);
    const auto s = root_power_sums(f, 4);
    EXPECT_EQ(s[0], e1);
    EXPECT_EQ(s[1], e1 * e1 - 2 * e2);
    EXPECT_EQ(e2 * e1 - 3 * e3, s[0] * s[1] - s[2]);
    EXPECT_EQ(e2 * e2 - 2 * e1 * e3, (s[1] * s[1] - s[3]) / 2);
    const auto e = elementary_from_power_sums(std::span<const Rational>(s.data(), 3));
    EXPECT_EQ(e, (std::vector<Rational>{1, e1, e2, e3}));
  }
}

TEST(Newton, ExampleOneExpansionOfGammaSymmetricFunctions) {
  Rng rng(65);
  int checked = 0;
  while (checked < 30) {
    const UniPoly f = rng.poly(3, -7, 7, true);
    if (!is_irreducible_over_Q(f)) continue;
    ++checked;
    const auto k = NumberField::trusted(f);
    const Rational a0 = rng.uniform(-4, 4), a1 = rng.uniform(-4, 4), a2 = rng.uniform(-4, 4);
    const NFElement g = k.element(UniPoly{a0, a1, a2});
    const Rational e1 = -f.coeff(2), e2 = f.coeff(1), e3 = -f.coeff(0);
    const Rational s1 = e1, s2 = e1 * e1 - 2 * e2;
    const Rational mixed = e2 * e1 - 3 * e3;     // sum mu_i^2 mu_j over i != j
    const Rational pairsq = e2 * e2 - 2 * e1 * e3;  // sum (mu_i mu_j)^2 over i < j

    const Rational ge1 = 3 * a0 + a1 * s1 + a2 * s2;
    const Rational ge2 = 3 * a0 * a0 + 2 * a0 * a1 * s1 + 2 * a0 * a2 * s2 + a1 * a1 * e2 +
                         a1 * a2 * mixed + a2 * a2 * pairsq;
    const Rational ge3 = a0 * a0 * a0 + a0 * a0 * a1 * s1 + a0 * a0 * a2 * s2 + a1 * a1 * a0 * e2 +
                         a0 * a2 * a2 * pairsq + a0 * a1 * a2 * mixed + a1 * a1 * a1 * e3 +
                         a1 * a1 * a2 * e3 * e1 + a1 * a2 * a2 * e3 * e2 + a2 * a2 * a2 * e3 * e3;
    const UniPoly h{-ge3, ge2, -ge1, 1};
    EXPECT_EQ(char_poly_of_element(g), h);
    EXPECT_EQ(char_poly_via_newton(g), h);
  }
}

TEST(AdmissibleGammas, QuadraticReflectionPermutes) {
  Rng rng(66);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const RatMatrix x = rng.matrix(n, -3, 3);
    const UniPoly p{rng.uniform(-3, 3), rng.uniform(-3, 3), 1};
    const UniPoly f = char_poly(eval_poly(p, x));
    if (!is_irreducible_over_Q(f)) continue;
    const auto gammas = admissible_gammas(f, p);
    ASSERT_FALSE(gammas.empty());
    ++found;
    const auto k = gammas.front().field();
    for (const auto& g : gammas) {
      const NFElement reflected = k.from_rational(-p.coeff(1)) - g;
      EXPECT_NE(std::find(gammas.begin(), gammas.end(), reflected), gammas.end());
    }
    for (const auto& fac : factor_over_Q(poly_compose(f, p)).factors)
      EXPECT_EQ(fac.poly.degree(), static_cast<int>(n));
  }
  EXPECT_GE(found, 5);
}
