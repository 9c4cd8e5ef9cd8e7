#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ratroot/rational.hpp"

namespace ratroot {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
// the last stored coefficient is nonzero, and the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t power);
  // x - c
  static UniPoly linear_root(const Rational& c);
  static UniPoly x() { return monomial(Rational(1), 1); }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && lc() == 1; }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& lc() const;

  Rational operator()(const Rational& at) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly operator-() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Human-readable, e.g. "x^3 - 3*x^2 + 3*x + 5".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Canonical order: by degree, then lexicographic on ascending coefficients.
bool canonical_less(const UniPoly& a, const UniPoly& b);

struct PolyDivMod {
  UniPoly quotient;
  UniPoly remainder;
};

// a = b*q + r with deg r < deg b. Throws InputError when b is zero.
PolyDivMod poly_divmod(const UniPoly& a, const UniPoly& b);

// Quotient a/b; throws InternalError if b does not divide a.
UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b);

bool poly_divides(const UniPoly& divisor, const UniPoly& a);

// Monic gcd. Throws InputError when both inputs are zero.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct PolyXgcd {
  UniPoly gcd;  // monic
  UniPoly s;
  UniPoly t;    // s*a + t*b = gcd
};

PolyXgcd poly_xgcd(const UniPoly& a, const UniPoly& b);

// f(p(x)).
UniPoly poly_compose(const UniPoly& f, const UniPoly& p);

UniPoly poly_pow(const UniPoly& a, unsigned e);

}  // namespace ratroot
