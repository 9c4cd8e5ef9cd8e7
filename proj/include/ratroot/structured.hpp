#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ratroot/matrix.hpp"
#include "ratroot/resultant.hpp"
#include "ratroot/solver.hpp"

namespace ratroot {

// A = T^{-1} (C_1 + ... + C_r) T with C_i the companion matrices of the
// distinct irreducible factors of char_poly(A), in canonical factor order.
struct CompanionJordanForm {
  RatMatrix t = RatMatrix::identity(1);
  std::vector<CompanionMatrix> blocks;

  RatMatrix block_diagonal() const;
  RatMatrix reconstruct() const;
};

// char_poly(A) is squarefree.
bool is_simple(const RatMatrix& a);

// Throws PreconditionError when A is not simple.
CompanionJordanForm companion_jordan(const RatMatrix& a, const FactorOptions& opts = {});

struct SimpleSolveReport {
  Decision decision = Decision::Unsolvable;
  UniPoly char_poly;
  UniPoly composition;
  Factorization factors;  // of the composition
  CompanionJordanForm form;
  std::vector<SolveReport> blocks;  // one irreducible-case report per block
  std::vector<RatMatrix> solutions;  // cartesian product over blocks
  std::size_t count = 0;
};

SimpleSolveReport solve_simple(const RatMatrix& a, const UniPoly& p,
                               const SolveOptions& opts = {});

bool is_nonderogatory(const RatMatrix& a);

// D(u, v) = sum_m p_m sum_{i<m} u^i v^{m-1-i}, as a polynomial in v with
// coefficients in Q[u].
BiPoly divided_difference(const UniPoly& p);

// prod over ordered root pairs (s, t) of h, s = t included, of D(g_s, g_t)
// is nonzero; evaluated as Res_u(h(u), Res_v(h(v), D(u, v))).
bool condition13_holds(const UniPoly& h, const UniPoly& p);

enum class NonderoVerdict { Sufficient, NoSolution, NotEstablished };

std::string_view to_string(NonderoVerdict v);

struct NonderoFactor {
  UniPoly factor;  // f_j
  unsigned multiplicity = 1;  // d_j
  std::vector<NFElement> admissible;
  std::vector<UniPoly> admissible_factors;  // h_j per admissible gamma
  std::vector<bool> condition13_per_gamma;
  bool condition13 = false;  // some admissible gamma passes
  std::size_t admissible_count() const noexcept { return admissible.size(); }
};

struct NonderoReport {
  UniPoly char_poly;
  std::vector<NonderoFactor> factors;
  NonderoVerdict verdict = NonderoVerdict::NotEstablished;
};

// Throws PreconditionError for derogatory A.
NonderoReport nondero_report(const RatMatrix& a, const UniPoly& p,
                             const FactorOptions& opts = {});

}  // namespace ratroot
