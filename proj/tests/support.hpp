#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "ratroot/matrix.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RatMatrix& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace ratroot

namespace ratroot::testing {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  UniPoly poly(int degree, long lo, long hi, bool monic) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform(lo, hi));
    if (monic) {
      c.emplace_back(1);
    } else {
      long lead = 0;
      while (lead == 0) lead = uniform(lo, hi);
      c.emplace_back(lead);
    }
    return UniPoly(std::move(c));
  }

  RatMatrix matrix(std::size_t n, long lo, long hi) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  // Unit lower times unit upper triangular, so always invertible.
  RatMatrix unimodular(std::size_t n, long spread) {
    RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = uniform(-spread, spread);
        u(j, i) = uniform(-spread, spread);
      }
    return l * u;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ratroot::testing

namespace ratroot::testing {

// Sylvester determinant, an oracle independent of the subresultant code.
inline Rational sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  RatMatrix s(size);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b.coeff(n - k);
  return determinant(s);
}

}  // namespace ratroot::testing
