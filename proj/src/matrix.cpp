#include "ratroot/matrix.hpp"

#include <utility>

#include "ratroot/errors.hpp"

namespace ratroot {

RatMatrix::RatMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw InputError("matrix dimension must be at least 1");
}

RatMatrix::RatMatrix(const std::vector<std::vector<Rational>>& rows)
    : n_(rows.size()), data_() {
  if (n_ == 0) throw InputError("matrix dimension must be at least 1");
  data_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_)
      throw InputError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n_));
    data_.insert(data_.end(), rows[i].begin(), rows[i].end());
  }
  for (auto& x : data_) x.canonicalize();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix([&] {
        std::vector<std::vector<Rational>> v;
        for (auto& r : rows) v.emplace_back(r);
        return v;
      }()) {}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& c) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  RatMatrix m(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.n_) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < m.n_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::direct_sum(std::span<const RatMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  RatMatrix m(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseRows<Rational> RatMatrix::rows() const {
  DenseRows<Rational> r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    r[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return r;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  if (rhs.n_ != n_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  if (rhs.n_ != n_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix dimension mismatch");
  const std::size_t n = a.n_;
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (v.size() != a.n_) throw InputError("vector length mismatch");
  RatVector r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string RatMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += ratroot::to_string((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

RatMatrix eval_poly(const UniPoly& p, const RatMatrix& x) {
  const std::size_t n = x.dim();
  RatMatrix acc(n);
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

namespace {

// Descending coefficients of det(xI - M) for the trailing principal
// submatrix M = a[k.., k..].
std::vector<Rational> berkowitz_vector(const RatMatrix& a, std::size_t k) {
  const std::size_t n = a.dim();
  const std::size_t m = n - k;
  if (m == 1) return {Rational(1), Rational(-a(k, k))};

  // Toeplitz column: 1, -a_kk, -R C, -R A' C, ..., -R A'^{m-2} C
  std::vector<Rational> diags;
  diags.reserve(m + 1);
  diags.emplace_back(1);
  diags.emplace_back(-a(k, k));
  std::vector<Rational> col(m - 1);
  for (std::size_t i = 0; i < m - 1; ++i) col[i] = a(k + 1 + i, k);
  for (std::size_t step = 0; step + 1 < m; ++step) {
    Rational dot = 0;
    for (std::size_t j = 0; j < m - 1; ++j) dot += a(k, k + 1 + j) * col[j];
    diags.emplace_back(-dot);
    if (step + 2 < m) {
      std::vector<Rational> next(m - 1);
      for (std::size_t i = 0; i < m - 1; ++i)
        for (std::size_t j = 0; j < m - 1; ++j)
          next[i] += a(k + 1 + i, k + 1 + j) * col[j];
      col = std::move(next);
    }
  }

  const auto sub = berkowitz_vector(a, k + 1);  // length m
  std::vector<Rational> out(m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < m && j <= i; ++j) out[i] += diags[i - j] * sub[j];
  return out;
}

}  // namespace

UniPoly char_poly(const RatMatrix& a) {
  auto desc = berkowitz_vector(a, 0);
  return UniPoly(std::vector<Rational>(desc.rbegin(), desc.rend()));
}

UniPoly min_poly(const RatMatrix& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  // Columns are vec(A^0), vec(A^1), ...; look for the first dependency.
  std::vector<RatVector> powers;
  RatMatrix cur = RatMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    RatVector v(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = cur(i, j);
    powers.push_back(std::move(v));

    DenseRows<Rational> sys(nn, std::vector<Rational>(powers.size()));
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < powers.size(); ++c) sys[r][c] = powers[c][r];
    auto kernel = nullspace(sys, Rational(0), Rational(1));
    if (!kernel.empty()) {
      RATROOT_ASSERT(kernel.size() == 1, "minimal polynomial dependency not unique");
      return UniPoly(kernel.front()).monic();
    }
    cur = cur * a;
  }
  throw InternalError("no linear dependency among the first n+1 powers");
}

RatMatrix mat_inverse(const RatMatrix& a) {
  const std::size_t n = a.dim();
  DenseRows<Rational> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  const auto pivots = rref_in_place(aug);
  std::size_t r = 0;
  while (r < pivots.size() && pivots[r] < n) ++r;
  if (r < n) throw SingularMatrixError(n, r);
  RatMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  return inv;
}

Rational determinant(const RatMatrix& a) {
  const auto cp = char_poly(a);
  Rational c0 = cp.coeff(0);
  return a.dim() % 2 ? Rational(-c0) : c0;
}

std::size_t matrix_rank(const RatMatrix& a) { return rank(a.rows()); }

RatMatrix krylov_matrix(const RatMatrix& a, const RatVector& v) {
  const std::size_t n = a.dim();
  if (v.size() != n) throw InputError("Krylov seed length mismatch");
  std::vector<RatVector> cols;
  cols.reserve(n);
  cols.push_back(v);
  for (std::size_t k = 1; k < n; ++k) cols.push_back(a * cols.back());
  return RatMatrix::from_columns(cols);
}

RatMatrix companion_matrix(const UniPoly& monic_poly) {
  if (!monic_poly.is_monic() || monic_poly.degree() < 1)
    throw PreconditionError("companion matrix needs a monic polynomial of degree >= 1");
  const auto n = static_cast<std::size_t>(monic_poly.degree());
  RatMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic_poly.coeff(i);
  return c;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

}  // namespace ratroot
