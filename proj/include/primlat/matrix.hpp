#pragma once

// Small dense matrices over exact scalars, with the integer normal forms
// everything else is built on: Bareiss determinants, Smith normal form with
// transformation matrices, saturated integer kernels.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "primlat/numeric.hpp"

namespace primlat {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(errc::dimension_mismatch, "ragged initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using IMat = Mat<Integer>;
using QMat = Mat<Rational>;
using IVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product shapes");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) fail(errc::dimension_mismatch, "matrix-vector shapes");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline QMat to_rational(const IMat& a) {
  QMat q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
  return q;
}

// x^T a y for an integer symmetric matrix.
inline Integer bilinear_value(const IMat& a, const IVec& x, const IVec& y) {
  if (x.size() != a.rows() || y.size() != a.cols())
    fail(errc::dimension_mismatch, "bilinear_value shapes");
  Integer s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

// Fraction-free Gaussian elimination (Bareiss).
inline Integer det(IMat a) {
  if (a.rows() != a.cols()) fail(errc::dimension_mismatch, "det of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

// Exact inverse of a nonsingular integer matrix.
inline QMat inverse(const IMat& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  QMat a = to_rational(m);
  QMat inv = QMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) fail(errc::degenerate, "singular matrix has no inverse");
    if (p != k) { a.swap_rows(k, p); inv.swap_rows(k, p); }
    Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) { a(k, j) /= piv; inv(k, j) /= piv; }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Smith normal form: u * a * v = d with u, v unimodular and d diagonal,
// nonnegative, d(i,i) | d(i+1,i+1).
struct SmithForm {
  IMat d, u, v;
  std::size_t rank = 0;  // number of nonzero diagonal entries
};

namespace detail {

// Replace rows i and j by unimodular combinations so that (j, col) vanishes.
inline void smith_row_step(IMat& d, IMat& u, std::size_t i, std::size_t j, std::size_t col) {
  Integer x, y;
  Integer g = ext_gcd(d(i, col), d(j, col), x, y);
  Integer ai = d(i, col) / g, aj = d(j, col) / g;
  for (std::size_t k = 0; k < d.cols(); ++k) {
    Integer di = d(i, k), dj = d(j, k);
    d(i, k) = x * di + y * dj;
    d(j, k) = -aj * di + ai * dj;
  }
  for (std::size_t k = 0; k < u.cols(); ++k) {
    Integer ui = u(i, k), uj = u(j, k);
    u(i, k) = x * ui + y * uj;
    u(j, k) = -aj * ui + ai * uj;
  }
}

inline void smith_col_step(IMat& d, IMat& v, std::size_t i, std::size_t j, std::size_t row) {
  Integer x, y;
  Integer g = ext_gcd(d(row, i), d(row, j), x, y);
  Integer ai = d(row, i) / g, aj = d(row, j) / g;
  for (std::size_t k = 0; k < d.rows(); ++k) {
    Integer di = d(k, i), dj = d(k, j);
    d(k, i) = x * di + y * dj;
    d(k, j) = -aj * di + ai * dj;
  }
  for (std::size_t k = 0; k < v.rows(); ++k) {
    Integer vi = v(k, i), vj = v(k, j);
    v(k, i) = x * vi + y * vj;
    v(k, j) = -aj * vi + ai * vj;
  }
}

}  // namespace detail

inline SmithForm smith_normal_form(const IMat& a) {
  SmithForm s;
  s.d = a;
  s.u = IMat::identity(a.rows());
  s.v = IMat::identity(a.cols());
  IMat& d = s.d;
  std::size_t m = a.rows(), n = a.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    // pivot: any nonzero entry in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m && !found; ++i)
      for (std::size_t j = t; j < n && !found; ++j)
        if (d(i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    if (pi != t) { d.swap_rows(t, pi); s.u.swap_rows(t, pi); }
    if (pj != t) { d.swap_cols(t, pj); s.v.swap_cols(t, pj); }
    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (d(i, t) != 0) detail::smith_row_step(d, s.u, t, i, t);
      bool row_clear = true;
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(t, j) != 0) { detail::smith_col_step(d, s.v, t, j, t); row_clear = false; }
      if (!row_clear) continue;  // column may have been refilled
      bool col_clear = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (d(i, t) != 0) { col_clear = false; break; }
      if (!col_clear) continue;
      // divisibility: d(t,t) must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            // fold row i into row t and restart the clearing loop
            for (std::size_t k = 0; k < n; ++k) d(t, k) += d(i, k);
            for (std::size_t k = 0; k < m; ++k) s.u(t, k) += s.u(i, k);
            divides = false;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < n; ++k) d(t, k) = -d(t, k);
      for (std::size_t k = 0; k < m; ++k) s.u(t, k) = -s.u(t, k);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

// Basis of the saturated integer kernel {x : a x = 0}, returned as columns.
inline IMat kernel_basis(const IMat& a) {
  SmithForm s = smith_normal_form(a);
  std::size_t n = a.cols();
  std::size_t k = n - s.rank;
  IMat basis(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = s.v(i, s.rank + j);
  return basis;
}

// Saturation of the row span of b: basis (as columns) of Q-rowspan(b) ∩ Z^n.
inline IMat saturate_rows(const IMat& b) {
  IMat kern = kernel_basis(b);        // columns orthogonal to the rows (dot product)
  return kernel_basis(kern.transposed());
}

}  // namespace primlat
