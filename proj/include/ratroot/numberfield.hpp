#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ratroot/factor.hpp"
#include "ratroot/rational.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

class NFElement;

// Q(mu) = Q[x]/(f) for a monic irreducible f, realized at the canonical root
// mu = class of x. Copies share the modulus.
class NumberField {
 public:
  // Verifies that f is irreducible; throws PreconditionError otherwise.
  static NumberField certified(const UniPoly& modulus, const FactorOptions& opts = {});
  // The caller guarantees irreducibility (e.g. f came out of factor_over_Q).
  static NumberField trusted(const UniPoly& modulus);

  const UniPoly& modulus() const noexcept { return *modulus_; }
  std::size_t degree() const noexcept {
    return static_cast<std::size_t>(modulus_->degree());
  }

  NFElement element(const UniPoly& rep) const;
  NFElement from_rational(const Rational& c) const;
  NFElement zero() const;
  NFElement one() const;
  NFElement generator() const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
  }

 private:
  explicit NumberField(UniPoly modulus);
  std::shared_ptr<const UniPoly> modulus_;
};

// Element of Q(mu), stored as its representative of degree < n; the
// coefficients of rep() are the coordinates in the basis 1, mu, ..., mu^{n-1}.
class NFElement {
 public:
  const NumberField& field() const noexcept { return field_; }
  const UniPoly& rep() const noexcept { return rep_; }
  // Exactly n coordinates.
  std::vector<Rational> coordinates() const;
  bool is_zero() const noexcept { return rep_.is_zero(); }

  NFElement operator-() const;
  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  // Throws InputError when b is zero.
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

 private:
  friend class NumberField;
  NFElement(NumberField field, UniPoly rep);
  NumberField field_;
  UniPoly rep_;
};

inline bool is_zero(const NFElement& x) noexcept { return x.is_zero(); }

// Extended Euclid against the modulus. Throws InputError for zero.
NFElement nf_inv(const NFElement& x);

// p(x) evaluated in the field.
NFElement nf_eval(const UniPoly& p, const NFElement& x);

// Polynomial in a fresh variable T over Q(mu); coefficient i multiplies T^i.
class NFPoly {
 public:
  NFPoly(NumberField field, std::vector<NFElement> coeffs);
  // Embeds a rational polynomial.
  static NFPoly embed(const NumberField& field, const UniPoly& p);

  const NumberField& field() const noexcept { return field_; }
  std::span<const NFElement> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const NFElement& lc() const;
  NFPoly monic() const;

  friend NFPoly operator-(const NFPoly& a, const NFPoly& b);
  friend bool operator==(const NFPoly&, const NFPoly&) = default;

 private:
  void trim();
  NumberField field_;
  std::vector<NFElement> coeffs_;
};

NFPoly nf_poly_rem(const NFPoly& a, const NFPoly& b);

// Monic gcd over Q(mu). Throws InputError when both are zero.
NFPoly nf_poly_gcd(const NFPoly& a, const NFPoly& b);

struct AdmissibleElement {
  UniPoly factor;    // degree-n irreducible factor h of f(p(x))
  NFElement gamma;   // the root of gcd(h(T), p(T) - mu)
};

// All gamma in Q(mu) with p(gamma) = mu, one per distinct degree-n
// irreducible factor of f(p(x)), in the factorization's canonical order.
std::vector<AdmissibleElement> admissible_from_factors(const NumberField& field,
                                                       const UniPoly& p,
                                                       const Factorization& composition);

// Factors f(p(x)) and returns the admissible gammas. f must be monic
// irreducible (PreconditionError otherwise) and p nonconstant.
std::vector<NFElement> admissible_gammas(const UniPoly& f, const UniPoly& p,
                                         const FactorOptions& opts = {});

// prod_i (x - g(mu_i)) computed as Res_t(f(t), x - g(t)), monic.
UniPoly char_poly_of_element(const NFElement& g);

// Same contract via power sums tr(g(C_f)^k) and Newton's identities.
UniPoly char_poly_via_newton(const NFElement& g);

// Newton's identities: e_0..e_n from power sums s_1..s_n.
std::vector<Rational> elementary_from_power_sums(std::span<const Rational> power_sums);

// Power sums s_1..s_count of the roots of a monic polynomial, via traces of
// its companion matrix powers.
std::vector<Rational> root_power_sums(const UniPoly& monic_poly, std::size_t count);

}  // namespace ratroot
