#pragma once

// Integral lattices: a non-degenerate symmetric integer Gram matrix on a
// fixed basis, with exact invariants and orthogonal complements of
// primitive vectors. Everything is a value; no operation mutates.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "primlat/matrix.hpp"
#include "primlat/numeric.hpp"

namespace primlat {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Signature {
  int pos = 0;
  int neg = 0;
  int rank() const { return pos + neg; }
  int index() const { return pos - neg; }
  bool indefinite() const { return pos > 0 && neg > 0; }
  bool operator==(const Signature&) const = default;
  Signature operator+(const Signature& o) const { return {pos + o.pos, neg + o.neg}; }
};

class Lattice {
 public:
  explicit Lattice(IMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols())
      fail(errc::non_symmetric, "Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (gram_(i, j) != gram_(j, i))
          fail(errc::non_symmetric, "Gram matrix must be symmetric");
    det_ = primlat::det(gram_);
    if (det_ == 0) fail(errc::degenerate, "Gram matrix has determinant 0");
  }

  const IMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Integer& det() const { return det_; }
  bool unimodular() const { return det_ == 1 || det_ == -1; }

  Parity parity() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return Parity::odd;
    return Parity::even;
  }

  // Counts of positive and negative squares of the rational diagonalization.
  // Symmetric Gaussian elimination with Schur-complement updates; when every
  // remaining diagonal entry vanishes, a hyperbolic 2x2 block is split off
  // and contributes (1,1).
  Signature signature() const {
    std::size_t n = rank();
    QMat m = to_rational(gram_);
    std::vector<bool> done(n, false);
    Signature sig;
    std::size_t handled = 0;
    while (handled < n) {
      std::size_t piv = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i] && m(i, i) != 0) { piv = i; break; }
      if (piv < n) {
        if (m(piv, piv) > 0) ++sig.pos; else ++sig.neg;
        done[piv] = true;
        ++handled;
        for (std::size_t k = 0; k < n; ++k) {
          if (done[k] || m(k, piv) == 0) continue;
          Rational f = m(k, piv) / m(piv, piv);
          for (std::size_t l = 0; l < n; ++l)
            if (!done[l]) m(k, l) -= f * m(piv, l);
        }
        continue;
      }
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && m(i, j) != 0) { bi = i; bj = j; break; }
      }
      if (bi == n) fail(errc::degenerate, "degenerate block in signature computation");
      ++sig.pos;
      ++sig.neg;
      Rational a = m(bi, bj);
      done[bi] = done[bj] = true;
      handled += 2;
      for (std::size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (done[l]) continue;
          m(k, l) -= (m(k, bi) * m(bj, l) + m(k, bj) * m(bi, l)) / a;
        }
      }
    }
    return sig;
  }

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  IMat gram_;
  Integer det_;
};

inline Lattice make_lattice(const IMat& gram) { return Lattice(gram); }

inline Lattice scale(const Lattice& l, const Integer& m) {
  if (m == 0) fail(errc::zero_scale, "scale factor must be nonzero");
  IMat g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= m;
  return Lattice(g);
}

inline Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  IMat g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return Lattice(g);
}

inline Integer inner(const Lattice& l, const IVec& x, const IVec& y) {
  return bilinear_value(l.gram(), x, y);
}

inline Integer norm_of(const Lattice& l, const IVec& x) { return inner(l, x, x); }

// c is characteristic iff c.x + x.x is even for all x, checked on a basis.
inline bool is_characteristic(const Lattice& l, const IVec& c) {
  if (c.size() != l.rank()) fail(errc::dimension_mismatch, "vector length vs rank");
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Integer cx = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) cx += l.gram()(i, j) * c[j];
    if ((cx + l.gram()(i, i)) % 2 != 0) return false;
  }
  return true;
}

// Solve G c = diag(G) over GF(2); entries of the result lie in {0,1}.
inline IVec find_characteristic(const Lattice& l) {
  std::size_t n = l.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = static_cast<int>(abs_of(l.gram()(i, j)) % 2);
    a[i][n] = static_cast<int>(abs_of(l.gram()(i, i)) % 2);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && a[i][col])
        for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[row][j];
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][n]) fail(errc::no_characteristic_element, "mod-2 system is inconsistent");
  IVec c(n, Integer(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = a[i][n];
  return c;
}

inline bool is_primitive(const IVec& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd_of(g, x);
  if (g == 0) fail(errc::zero_vector, "zero vector");
  return g == 1;
}

struct ComplementResult {
  Lattice lattice;      // induced Gram on the kernel basis
  IMat basis;           // columns: the kernel basis in ambient coordinates
};

// Gram matrix of the sublattice spanned by the columns of `basis`.
inline Lattice sublattice(const Lattice& l, const IMat& basis) {
  if (basis.rows() != l.rank()) fail(errc::dimension_mismatch, "basis vs rank");
  IMat g = basis.transposed() * l.gram() * basis;
  return Lattice(g);  // throws Degenerate if the restriction is degenerate
}

// Orthogonal complement of the span of `vectors` (columns). The kernel of
// the pairing map is saturated, so the complement is primitively embedded.
inline ComplementResult sublattice_complement(const Lattice& l, const IMat& vectors) {
  IMat pairing = vectors.transposed() * l.gram();  // rows: x -> v_i . x
  IMat basis = kernel_basis(pairing);
  return ComplementResult{sublattice(l, basis), basis};
}

inline ComplementResult orthogonal_complement(const Lattice& l, const IVec& v) {
  if (v.size() != l.rank()) fail(errc::dimension_mismatch, "vector length vs rank");
  if (!is_primitive(v)) fail(errc::not_primitive, "vector is not primitive");
  if (norm_of(l, v) == 0) fail(errc::isotropic_vector, "vector has self-intersection 0");
  IMat cols(l.rank(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) cols(i, 0) = v[i];
  return sublattice_complement(l, cols);
}

}  // namespace primlat
