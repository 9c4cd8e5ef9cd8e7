#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ratroot/linalg.hpp"
#include "ratroot/rational.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

using RatVector = std::vector<Rational>;

// Square n x n matrix of rationals, n >= 1, row-major storage.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n);
  // Throws InputError on ragged or non-square input.
  explicit RatMatrix(const std::vector<std::vector<Rational>>& rows);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(std::size_t n, const Rational& c);
  // Columns given as vectors of length n.
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  // Block diagonal sum.
  static RatMatrix direct_sum(std::span<const RatMatrix> blocks);

  std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  RatVector column(std::size_t j) const;
  Rational trace() const;
  bool is_zero() const;
  RatMatrix transpose() const;
  DenseRows<Rational> rows() const;

  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

// p(X) by Horner's rule.
RatMatrix eval_poly(const UniPoly& p, const RatMatrix& x);

// det(xI - A), Berkowitz's division-free algorithm.
UniPoly char_poly(const RatMatrix& a);

// First linear dependency among I, A, A^2, ...; monic.
UniPoly min_poly(const RatMatrix& a);

// Throws SingularMatrixError carrying the rank.
RatMatrix mat_inverse(const RatMatrix& a);

Rational determinant(const RatMatrix& a);

std::size_t matrix_rank(const RatMatrix& a);

// Columns v, Av, ..., A^{n-1}v.
RatMatrix krylov_matrix(const RatMatrix& a, const RatVector& v);

// Companion matrix of a monic polynomial: ones on the subdiagonal,
// negated coefficients in the last column. krylov_matrix(C, e1) = I.
RatMatrix companion_matrix(const UniPoly& monic_poly);

RatVector unit_vector(std::size_t n, std::size_t i);

}  // namespace ratroot
