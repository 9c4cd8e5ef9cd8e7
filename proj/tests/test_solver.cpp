#include <gtest/gtest.h>

#include <algorithm>

#include "ratroot/errors.hpp"
#include "ratroot/linalg.hpp"
#include "ratroot/solver.hpp"
#include "support.hpp"

using namespace ratroot;
using ratroot::testing::q;
using ratroot::testing::Rng;

namespace {

const RatMatrix kEx2A{{0, 1, 0}, {0, 0, 1}, {-3, 0, 0}};
const UniPoly kEx2P{0, 0, 1};
const RatMatrix kEx3A{{-1, 6, 2}, {-1, -1, -2}, {-3, 3, -1}};
const UniPoly kEx3P{-1, -1, 1};
const RatMatrix kEx3X{{1, 0, 2}, {-1, 1, 0}, {0, 3, 1}};
const RatMatrix kEx5A{{1, -2}, {-4, 1}};
const UniPoly kEx5P{1, -4, 0, 1};
const RatMatrix kEx5X{{0, 1}, {2, 0}};

// X is a rational polynomial in A: vec(X) lies in the span of vec(A^i), i < n.
bool is_polynomial_in(const RatMatrix& x, const RatMatrix& a) {
  const std::size_t n = a.dim();
  DenseRows<Rational> cols;
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(power(r, c));
    cols.push_back(v);
    power = power * a;
  }
  const std::size_t base = rank(cols);
  std::vector<Rational> vx;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) vx.push_back(x(r, c));
  cols.push_back(vx);
  return rank(cols) == base;
}

bool contains(const std::vector<RatMatrix>& xs, const RatMatrix& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST(Decide, ExampleTwoUnsolvable) {
  const auto r = decide(kEx2A, kEx2P);
  EXPECT_EQ(r.decision, Decision::Unsolvable);
  EXPECT_EQ(r.char_poly, (UniPoly{3, 0, 0, 1}));
  EXPECT_EQ(r.composition, (UniPoly{3, 0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(r.factors.is_irreducible());
  EXPECT_EQ(r.count, 0u);
  EXPECT_TRUE(r.admissible.empty());
}

TEST(Decide, ExampleThreeSolvable) {
  const auto r = decide(kEx3A, kEx3P);
  EXPECT_EQ(r.decision, Decision::Solvable);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.admissible.size(), 2u);
  EXPECT_TRUE(r.solutions.empty());
  EXPECT_EQ(r.admissible_factors,
            (std::vector<UniPoly>{UniPoly{-6, 0, 0, 1}, UniPoly{5, 3, -3, 1}}));
}

TEST(Decide, ExampleFiveSolvable) {
  const auto r = decide(kEx5A, kEx5P);
  EXPECT_EQ(r.decision, Decision::Solvable);
  EXPECT_EQ(r.count, 1u);
  EXPECT_EQ(r.admissible_factors, (std::vector<UniPoly>{UniPoly{-2, 0, 1}}));
}

TEST(Decide, Preconditions) {
  EXPECT_THROW(decide(RatMatrix{{4, 0}, {0, 9}}, kEx2P), ReducibleCharPolyError);
  EXPECT_THROW(decide(RatMatrix{{3}}, UniPoly::constant(3)), ConstantPolynomialError);
  EXPECT_EQ(decide(kEx5A, UniPoly::constant(3)).decision, Decision::Unsolvable);
  EXPECT_EQ(decide(RatMatrix{{2}}, UniPoly::constant(3)).decision, Decision::Unsolvable);
}

TEST(SolveFromFactor, Examples) {
  EXPECT_EQ(solve_from_factor(kEx3A, kEx3P, UniPoly{5, 3, -3, 1}), kEx3X);
  EXPECT_EQ(solve_from_factor(kEx5A, kEx5P, UniPoly{-2, 0, 1}), kEx5X);
  EXPECT_EQ(solve_from_factor(kEx3A, UniPoly{0, 1}, char_poly(kEx3A)), kEx3A);
}

TEST(SolveFromFactor, Preconditions) {
  EXPECT_THROW(solve_from_factor(kEx3A, kEx3P, UniPoly{-5, 0, 0, 1}), PreconditionError);
  EXPECT_THROW(solve_from_factor(kEx3A, kEx3P, UniPoly{-6, 0, 0, 2}), PreconditionError);
  EXPECT_THROW(solve_from_factor(kEx3A, kEx3P, UniPoly{-6, 1}), PreconditionError);
  EXPECT_THROW(solve_from_factor(kEx3A, UniPoly::constant(2), UniPoly{-6, 0, 0, 1}),
               ConstantPolynomialError);
}

TEST(Drazin, ExampleFiveHandExecution) {
  const auto k = NumberField::certified(char_poly(kEx5A));
  const NFElement mu = k.generator();
  const NFElement gamma = k.element(UniPoly{q(1, 2), q(-1, 2)});
  const std::vector<NFElement> w{k.from_rational(2), k.one() - mu};
  const auto d = drazin_construct(kEx5A, gamma, w);
  EXPECT_EQ(d.w_coords, (RatMatrix{{2, 0}, {1, -1}}));
  EXPECT_EQ(d.gamma_w_coords, (RatMatrix{{1, -1}, {4, 0}}));
  EXPECT_EQ(d.solution, kEx5X);
  EXPECT_EQ(solve_drazin(kEx5A, kEx5P, gamma), kEx5X);
}

TEST(Drazin, EigenvectorIsEigenvector) {
  for (const RatMatrix& a : {kEx3A, kEx5A, kEx2A}) {
    const auto k = NumberField::certified(char_poly(a));
    const auto w = eigenvector_for_generator(a, k);
    ASSERT_EQ(w.size(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      NFElement lhs = k.zero();
      for (std::size_t j = 0; j < a.dim(); ++j) lhs = lhs + k.from_rational(a(i, j)) * w[j];
      EXPECT_EQ(lhs, k.generator() * w[i]);
    }
  }
}

TEST(Drazin, IdentityPolynomialAndExampleThree) {
  const auto k = NumberField::certified(char_poly(kEx3A));
  EXPECT_EQ(solve_drazin(kEx3A, UniPoly{0, 1}, k.generator()), kEx3A);
  const auto r = decide(kEx3A, kEx3P);
  for (std::size_t i = 0; i < r.admissible.size(); ++i)
    EXPECT_EQ(solve_drazin(kEx3A, kEx3P, r.admissible[i]),
              solve_from_factor(kEx3A, kEx3P, r.admissible_factors[i]));
  EXPECT_EQ(solve_drazin(kEx3A, kEx3P, r.admissible[1]), kEx3X);
}

TEST(Drazin, RejectsNonAdmissible) {
  const auto k = NumberField::certified(char_poly(kEx5A));
  EXPECT_THROW(solve_drazin(kEx5A, kEx5P, k.generator()), PreconditionError);
  const auto other = NumberField::certified(UniPoly{-3, 0, 1});
  EXPECT_THROW(solve_drazin(kEx5A, kEx5P, other.generator()), PreconditionError);
}

TEST(Enumerate, ExampleThreeBothSolutions) {
  const auto r = enumerate_solutions(kEx3A, kEx3P);
  ASSERT_EQ(r.solutions.size(), 2u);
  EXPECT_EQ(r.count, 2u);
  EXPECT_TRUE(contains(r.solutions, kEx3X));
  EXPECT_EQ(char_poly(r.solutions[0]), (UniPoly{-6, 0, 0, 1}));
  EXPECT_EQ(char_poly(r.solutions[1]), (UniPoly{5, 3, -3, 1}));
  for (const auto& x : r.solutions) {
    EXPECT_TRUE(verify_solution(kEx3A, kEx3P, x));
    EXPECT_EQ(x * kEx3A, kEx3A * x);
    EXPECT_TRUE(is_polynomial_in(x, kEx3A));
  }
  EXPECT_NE(r.solutions[0], r.solutions[1]);
}

TEST(Enumerate, ExamplesFiveAndTwo) {
  EXPECT_EQ(enumerate_solutions(kEx5A, kEx5P).solutions, (std::vector<RatMatrix>{kEx5X}));
  EXPECT_TRUE(enumerate_solutions(kEx2A, kEx2P).solutions.empty());
}

TEST(Enumerate, LinearPolynomial) {
  const UniPoly p{1, 2};
  const auto r = enumerate_solutions(kEx3A, p);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.solutions[0], (kEx3A - RatMatrix::identity(3)) * q(1, 2));
}

TEST(Enumerate, RandomInstancesContainSeed) {
  Rng rng(71);
  int used = 0;
  for (int trial = 0; trial < 200 && used < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const RatMatrix x = rng.matrix(n, -3, 3);
    const UniPoly p = rng.poly(static_cast<int>(rng.uniform(2, 3)), -3, 3, false);
    const RatMatrix a = eval_poly(p, x);
    if (!is_irreducible_over_Q(char_poly(a))) continue;
    ++used;
    const auto r = enumerate_solutions(a, p);
    EXPECT_TRUE(contains(r.solutions, x));
    EXPECT_EQ(r.count, r.solutions.size());
    EXPECT_EQ(r.count, r.factors.factors_of_degree(static_cast<int>(n)).size());
    for (const auto& s : r.solutions) EXPECT_TRUE(verify_solution(a, p, s));
  }
  EXPECT_GE(used, 10);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_solution(kEx3A, kEx3P, kEx3X));
  EXPECT_TRUE(verify_solution(kEx5A, kEx5P, kEx5X));
  EXPECT_FALSE(verify_solution(kEx5A, UniPoly{0, 0, 1}, kEx5A));
  EXPECT_THROW(verify_solution(kEx5A, kEx5P, kEx3X), InputError);
}

TEST(CompanionMatrix, Invariants) {
  const UniPoly g{5, 3, -3, 1};
  const auto c = CompanionMatrix::of(g);
  EXPECT_EQ(char_poly(c.matrix), g);
  EXPECT_EQ(min_poly(c.matrix), g);
}

TEST(Decision, Names) {
  EXPECT_EQ(to_string(Decision::Solvable), "SOLVABLE");
  EXPECT_EQ(to_string(Decision::Unsolvable), "UNSOLVABLE");
}
