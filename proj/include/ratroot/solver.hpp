#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ratroot/errors.hpp"
#include "ratroot/factor.hpp"
#include "ratroot/matrix.hpp"
#include "ratroot/numberfield.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

// p(X) = A with constant p has either no solution or every X as a solution.
class ConstantPolynomialError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The irreducible-case solver was handed A with reducible char_poly(A).
class ReducibleCharPolyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class Decision { Solvable, Unsolvable };

std::string_view to_string(Decision d);

struct SolveOptions {
  FactorOptions factor;
  // Rebuild every solution by the eigenvector route and require equality.
  bool cross_check_drazin = true;
};

struct SolveReport {
  Decision decision = Decision::Unsolvable;
  UniPoly char_poly;             // f
  UniPoly composition;           // f(p(x))
  Factorization factors;         // of the composition
  std::vector<NFElement> admissible;
  std::vector<UniPoly> admissible_factors;  // h for each admissible gamma
  std::vector<RatMatrix> solutions;         // empty from decide()
  std::size_t count = 0;
};

struct CompanionMatrix {
  UniPoly poly;
  RatMatrix matrix;

  static CompanionMatrix of(const UniPoly& monic_poly);
};

// Decides solvability for A with irreducible characteristic polynomial.
// count is the number of admissible gammas; solutions is left empty.
// Throws ReducibleCharPolyError or ConstantPolynomialError.
SolveReport decide(const RatMatrix& a, const UniPoly& p, const SolveOptions& opts = {});

// X = S^{-1} C_h S with S = K_B K_A^{-1}, K_B = krylov(p(C_h), e1),
// K_A = krylov(A, e1). Requires h monic of degree n dividing f(p(x)).
RatMatrix solve_from_factor(const RatMatrix& a, const UniPoly& p, const UniPoly& h,
                            const FactorOptions& opts = {});

struct DrazinConstruction {
  std::vector<NFElement> eigenvector;  // w with A w = mu w
  RatMatrix w_coords;                  // W, with W v(mu) = w
  RatMatrix gamma_w_coords;            // C, with C v(mu) = gamma w
  RatMatrix solution;                  // X = C W^{-1}
};

// Eigenvector of A for mu = generator of the field, from the nullspace of
// A - mu I with the last free coordinate set to 1.
std::vector<NFElement> eigenvector_for_generator(const RatMatrix& a, const NumberField& field);

DrazinConstruction drazin_construct(const RatMatrix& a, const NFElement& gamma,
                                    const std::vector<NFElement>& eigenvector);

// Eigenvector route: X w = gamma w for the eigenvector w of mu.
RatMatrix solve_drazin(const RatMatrix& a, const UniPoly& p, const NFElement& gamma);

// One solution per distinct degree-n irreducible factor of f(p(x)).
SolveReport enumerate_solutions(const RatMatrix& a, const UniPoly& p,
                                const SolveOptions& opts = {});

// p(X) == A exactly. Throws InputError on dimension mismatch.
bool verify_solution(const RatMatrix& a, const UniPoly& p, const RatMatrix& x);

}  // namespace ratroot
