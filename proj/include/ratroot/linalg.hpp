#pragma once

// Gaussian elimination over an exact field. F needs copy, +, -, *, /, and an
// is_zero(const F&) overload visible here or via ADL.

#include <cstddef>
#include <utility>
#include <vector>

#include "ratroot/rational.hpp"

namespace ratroot {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

template <class F>
using DenseRows = std::vector<std::vector<F>>;

// Reduces m to reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(DenseRows<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const F lead = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of {x : m x = 0}; each basis vector has a 1 in one free coordinate
// and 0 in the others.
template <class F>
std::vector<std::vector<F>> nullspace(DenseRows<F> m, const F& zero,
                                      const F& one) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, zero);
    v[free] = one;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = zero - m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::size_t rank(DenseRows<F> m) {
  return rref_in_place(m).size();
}

}  // namespace ratroot
