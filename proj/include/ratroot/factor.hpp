#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ratroot/modp.hpp"
#include "ratroot/rational.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

struct FactorOptions {
  // Abort when a squarefree part splits into more modular factors than this.
  std::size_t max_recombination = 24;
  // Seed for the equal-degree splitting generator.
  std::uint64_t seed = 1;
};

struct Factor {
  UniPoly poly;  // monic, irreducible over Q, degree >= 1
  unsigned multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// content * prod(poly^multiplicity) reproduces the input. Factors are
// pairwise distinct and sorted by canonical_less.
struct Factorization {
  Rational content;
  std::vector<Factor> factors;

  UniPoly expand() const;
  bool is_irreducible() const;
  // Distinct factors of the given degree, in canonical order.
  std::vector<UniPoly> factors_of_degree(int degree) const;
};

// Yun's algorithm. Returns monic, squarefree, pairwise coprime parts with
// multiplicities; prod(part^mult) = a / lc(a). Throws InputError on zero.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decompose(const UniPoly& a);

// Complete factorization over Q. Throws InputError when a = 0 and
// FactorBudgetError when the recombination budget is exceeded.
Factorization factor_over_Q(const UniPoly& a, const FactorOptions& opts = {});

bool is_irreducible_over_Q(const UniPoly& a, const FactorOptions& opts = {});

// Integer polynomial with coprime coefficients and positive leading
// coefficient, equal to a up to a rational scalar.
ZPoly primitive_integer_part(const UniPoly& a);

UniPoly to_unipoly(const ZPoly& a);

// Smallest odd prime not dividing lc(a) for which a stays squarefree mod p.
std::uint64_t select_prime(const ZPoly& squarefree);

// Bound on the absolute value of every coefficient of any integer factor of a.
Integer mignotte_bound(const ZPoly& a);

// Irreducible factors over Z of a primitive squarefree integer polynomial of
// degree >= 1 (Zassenhaus: mod-p factorization, Hensel lifting, subset
// recombination). Factors are primitive with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& a, const FactorOptions& opts = {});

}  // namespace ratroot
