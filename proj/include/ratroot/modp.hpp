#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ratroot/rational.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

// Dense polynomial over F_p for an odd prime p < 2^32. The stored leading
// coefficient is nonzero; the zero polynomial is empty.
class ModPPoly {
 public:
  ModPPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  // Reduces integer coefficients mod p. Throws InputError for non-integers.
  static ModPPoly reduce(std::uint64_t p, const UniPoly& a);
  static ModPPoly reduce(std::uint64_t p, std::span<const Integer> a);
  static ModPPoly constant(std::uint64_t p, std::uint64_t c);
  static ModPPoly x(std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::span<const std::uint64_t> coeffs() const noexcept { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lc() const;

  ModPPoly monic() const;
  ModPPoly derivative() const;

  friend ModPPoly operator+(const ModPPoly& a, const ModPPoly& b);
  friend ModPPoly operator-(const ModPPoly& a, const ModPPoly& b);
  friend ModPPoly operator*(const ModPPoly& a, const ModPPoly& b);
  friend bool operator==(const ModPPoly&, const ModPPoly&) = default;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

struct ModPDivMod {
  ModPPoly quotient;
  ModPPoly remainder;
};

ModPDivMod divmod(const ModPPoly& a, const ModPPoly& b);
ModPPoly gcd(const ModPPoly& a, const ModPPoly& b);  // monic

struct ModPXgcd {
  ModPPoly gcd;
  ModPPoly s;
  ModPPoly t;  // s*a + t*b = gcd
};
ModPXgcd xgcd(const ModPPoly& a, const ModPPoly& b);

// base^e mod modulus.
ModPPoly powmod(const ModPPoly& base, const Integer& e, const ModPPoly& modulus);

bool is_squarefree(const ModPPoly& a);

// Canonical order: by degree, then lexicographic on ascending coefficients.
bool canonical_less(const ModPPoly& a, const ModPPoly& b);

// Monic irreducible factors of a squarefree polynomial, in canonical order.
// Distinct-degree factorization followed by Cantor-Zassenhaus splitting
// driven by a generator seeded with `seed`. Throws PreconditionError when a
// is not squarefree mod p or has degree < 1.
std::vector<ModPPoly> factor_mod_p(const ModPPoly& a, std::uint64_t seed = 1);

// Integer polynomial, ascending coefficients.
using ZPoly = std::vector<Integer>;

struct HenselLift {
  ZPoly g;  // carries the leading coefficient of a
  ZPoly h;  // monic
  Integer modulus;  // p^k; coefficients are symmetric residues
};

// Lifts a = g*h mod p to a = G*H mod p^k by quadratic Hensel steps.
// Requires h monic, g*h = a mod p, gcd(g, h) = 1 mod p, a integral.
// Throws PreconditionError on non-coprime or inconsistent inputs.
HenselLift hensel_lift(const UniPoly& a, const ModPPoly& g, const ModPPoly& h,
                       unsigned k);
HenselLift hensel_lift(const ZPoly& a, const ModPPoly& g, const ModPPoly& h,
                       unsigned k);

// Lifts a = lc(a) * prod(factors) mod p to monic factors mod p^k, in the same
// order, symmetric residues.
std::vector<ZPoly> hensel_lift_all(const ZPoly& a,
                                   const std::vector<ModPPoly>& factors,
                                   unsigned k);

}  // namespace ratroot
