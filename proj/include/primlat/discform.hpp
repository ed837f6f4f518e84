#pragma once

// Discriminant groups A(L) = L*/L with their finite bilinear (values in
// Q/Z) and quadratic (values in Q/2Z) forms, isomorphism testing by
// generator-image search, and the mod-8 Gauss-sum signature.
//
// Quadratic values are kept modulo 2Z; the mod-Z reduction used by some
// texts is available at the rendering layer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primlat/fixed_trig.hpp"
#include "primlat/lattice.hpp"
#include "primlat/matrix.hpp"
#include "primlat/numeric.hpp"

namespace primlat {

inline constexpr std::int64_t kMaxGroupOrder = 10000;

struct FiniteAbelianGroup {
  std::vector<Integer> factors;  // invariant factors d1 | d2 | ..., each > 1
  QMat lifts;                    // ambient-rank x length columns; empty for synthetic groups

  std::size_t length() const { return factors.size(); }

  Integer order() const {
    Integer n = 1;
    for (const Integer& d : factors) n *= d;
    return n;
  }

  bool trivial() const { return factors.empty(); }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors == b.factors;
  }
};

// Elements are coordinate tuples relative to the invariant-factor generators.
using GroupElement = std::vector<Integer>;

inline Integer element_order(const FiniteAbelianGroup& g, const GroupElement& x) {
  Integer ord = 1;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    ord = lcm_of(ord, g.factors[i] / gcd_of(g.factors[i], x[i]));
  return ord;
}

// Visit every element of the group (order must fit in the brute-force cap).
template <typename F>
void for_each_element(const FiniteAbelianGroup& g, F&& f) {
  GroupElement x(g.length(), Integer(0));
  for (;;) {
    f(const_cast<const GroupElement&>(x));
    std::size_t i = 0;
    while (i < x.size()) {
      ++x[i];
      if (x[i] < g.factors[i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == x.size()) break;
  }
}

namespace detail {

struct DiscGroupData {
  FiniteAbelianGroup group;
  QMat pairing;  // length x length: lift_i^T G lift_j as exact rationals
};

inline DiscGroupData disc_group_data(const Lattice& l) {
  SmithForm s = smith_normal_form(l.gram());
  std::size_t n = l.rank();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (s.d(i, i) > 1) keep.push_back(i);
  DiscGroupData out;
  out.group.factors.reserve(keep.size());
  for (std::size_t i : keep) out.group.factors.push_back(s.d(i, i));
  // lift of generator i: column keep[i] of V divided by its invariant factor
  out.group.lifts = QMat(n, keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      out.group.lifts(i, j) = Rational(s.v(i, keep[j]), s.d(keep[j], keep[j]));
  QMat gq = to_rational(l.gram());
  out.pairing = out.group.lifts.transposed() * gq * out.group.lifts;
  return out;
}

}  // namespace detail

inline FiniteAbelianGroup disc_group(const Lattice& l) {
  return detail::disc_group_data(l).group;
}

inline std::vector<Integer> invariant_factors(const Lattice& l) {
  return disc_group(l).factors;
}

inline std::size_t group_length(const FiniteAbelianGroup& g) { return g.length(); }

class FiniteBilinearForm {
 public:
  FiniteBilinearForm(FiniteAbelianGroup group, QMat values)
      : group_(std::move(group)), values_(std::move(values)) {
    std::size_t k = group_.length();
    if (values_.rows() != k || values_.cols() != k)
      fail(errc::dimension_mismatch, "bilinear table shape");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        values_(i, j) = mod_one(values_(i, j));
        if (values_(i, j) != mod_one(values_(j, i)))
          fail(errc::non_symmetric, "bilinear table not symmetric");
        if (mod_one(values_(i, j) * group_.factors[i]) != 0)
          fail(errc::internal, "bilinear value incompatible with generator order");
      }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const QMat& values() const { return values_; }

  Rational eval(const GroupElement& x, const GroupElement& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < group_.length(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < group_.length(); ++j)
        if (y[j] != 0) s += Rational(x[i] * y[j]) * values_(i, j);
    }
    return mod_one(s);
  }

 private:
  FiniteAbelianGroup group_;
  QMat values_;
};

class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm(FiniteAbelianGroup group, std::vector<Rational> qdiag, QMat bilinear)
      : group_(std::move(group)), qdiag_(std::move(qdiag)),
        bilinear_(FiniteBilinearForm(group_, std::move(bilinear))) {
    std::size_t k = group_.length();
    if (qdiag_.size() != k) fail(errc::dimension_mismatch, "quadratic table shape");
    for (std::size_t i = 0; i < k; ++i) {
      qdiag_[i] = mod_two(qdiag_[i]);
      if (mod_one(qdiag_[i]) != bilinear_.values()(i, i))
        fail(errc::internal, "quadratic values must refine the bilinear diagonal");
      if (mod_two(qdiag_[i] * group_.factors[i] * group_.factors[i]) != 0)
        fail(errc::internal, "quadratic value incompatible with generator order");
    }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Rational>& qvalues() const { return qdiag_; }
  const FiniteBilinearForm& bilinear() const { return bilinear_; }

  // q(sum x_i g_i) = sum x_i^2 q(g_i) + 2 sum_{i<j} x_i x_j b(g_i, g_j) mod 2.
  Rational eval(const GroupElement& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < group_.length(); ++i) {
      if (x[i] == 0) continue;
      s += Rational(x[i] * x[i]) * qdiag_[i];
      for (std::size_t j = i + 1; j < group_.length(); ++j)
        if (x[j] != 0) s += Rational(2 * x[i] * x[j]) * bilinear_.values()(i, j);
    }
    return mod_two(s);
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<Rational> qdiag_;
  FiniteBilinearForm bilinear_;
};

inline FiniteBilinearForm disc_bilinear(const Lattice& l) {
  detail::DiscGroupData d = detail::disc_group_data(l);
  QMat values = d.pairing;
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < values.cols(); ++j) values(i, j) = mod_one(values(i, j));
  return FiniteBilinearForm(std::move(d.group), std::move(values));
}

inline FiniteQuadraticForm disc_quadratic(const Lattice& l) {
  if (l.parity() != Parity::even)
    fail(errc::odd_lattice, "discriminant quadratic form requires an even lattice");
  detail::DiscGroupData d = detail::disc_group_data(l);
  std::size_t k = d.group.length();
  std::vector<Rational> qdiag(k);
  QMat bil(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    qdiag[i] = mod_two(d.pairing(i, i));
    for (std::size_t j = 0; j < k; ++j) bil(i, j) = mod_one(d.pairing(i, j));
  }
  return FiniteQuadraticForm(std::move(d.group), std::move(qdiag), std::move(bil));
}

inline FiniteBilinearForm negate(const FiniteBilinearForm& f) {
  QMat v = f.values();
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = mod_one(-v(i, j));
  return FiniteBilinearForm(f.group(), std::move(v));
}

inline FiniteQuadraticForm negate(const FiniteQuadraticForm& f) {
  std::vector<Rational> q = f.qvalues();
  for (Rational& x : q) x = mod_two(-x);
  QMat v = f.bilinear().values();
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = mod_one(-v(i, j));
  return FiniteQuadraticForm(f.group(), std::move(q), std::move(v));
}

inline FiniteBilinearForm cyclic_bilinear(const Integer& m, const Rational& value) {
  if (m < 1) fail(errc::out_of_range, "cyclic group order must be >= 1");
  FiniteAbelianGroup g;
  if (m > 1) g.factors = {m};
  QMat v(g.length(), g.length());
  if (m > 1) v(0, 0) = mod_one(value);
  return FiniteBilinearForm(std::move(g), std::move(v));
}

inline FiniteQuadraticForm cyclic_quadratic(const Integer& m, const Rational& qvalue) {
  if (m < 1) fail(errc::out_of_range, "cyclic group order must be >= 1");
  FiniteAbelianGroup g;
  if (m > 1) g.factors = {m};
  std::vector<Rational> q;
  QMat v(g.length(), g.length());
  if (m > 1) {
    q.push_back(mod_two(qvalue));
    v(0, 0) = mod_one(qvalue);
  }
  return FiniteQuadraticForm(std::move(g), std::move(q), std::move(v));
}

namespace detail {

inline void check_group_order(const FiniteAbelianGroup& g) {
  if (g.order() > kMaxGroupOrder)
    fail(errc::group_too_large, "group order exceeds the brute-force bound " +
                                    std::to_string(kMaxGroupOrder));
}

// Backtracking search for a value-preserving isomorphism; `diag` gives the
// quantity that must match on single generators, `pair` on pairs.
template <typename DiagFn, typename PairFn>
bool isomorphism_exists(const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2,
                        DiagFn&& diag2_matches, PairFn&& pair2_matches) {
  if (!(g1 == g2)) return false;
  if (g1.trivial()) return true;
  std::vector<GroupElement> elements;
  for_each_element(g2, [&](const GroupElement& x) { elements.push_back(x); });
  std::size_t k = g1.length();
  std::vector<GroupElement> images(k);
  // generated-subgroup cardinality check at the leaves
  auto generates = [&](const std::vector<GroupElement>& gens) {
    std::map<GroupElement, bool> seen;
    std::vector<GroupElement> frontier{GroupElement(k, Integer(0))};
    seen[frontier.front()] = true;
    while (!frontier.empty()) {
      GroupElement x = frontier.back();
      frontier.pop_back();
      for (const GroupElement& gen : gens) {
        GroupElement y(k);
        for (std::size_t i = 0; i < k; ++i) y[i] = (x[i] + gen[i]) % g2.factors[i];
        if (!seen[y]) { seen[y] = true; frontier.push_back(y); }
      }
    }
    return Integer(seen.size()) == g2.order();
  };
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t level) -> bool {
    if (level == k) return generates(images);
    for (const GroupElement& cand : elements) {
      // image order must divide the generator order for well-definedness
      if (g1.factors[level] % element_order(g2, cand) != 0) continue;
      if (!diag2_matches(level, cand)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j)
        ok = pair2_matches(j, level, images[j], cand);
      if (!ok) continue;
      images[level] = cand;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

inline bool forms_isomorphic(const FiniteBilinearForm& f1, const FiniteBilinearForm& f2) {
  if (!(f1.group() == f2.group())) return false;
  detail::check_group_order(f1.group());
  std::size_t k = f1.group().length();
  std::vector<GroupElement> gens(k, GroupElement(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) gens[i][i] = 1;
  return detail::isomorphism_exists(
      f1.group(), f2.group(),
      [&](std::size_t i, const GroupElement& cand) {
        return f2.eval(cand, cand) == f1.eval(gens[i], gens[i]);
      },
      [&](std::size_t i, std::size_t j, const GroupElement& a, const GroupElement& b) {
        return f2.eval(a, b) == f1.eval(gens[i], gens[j]);
      });
}

inline bool forms_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2) {
  if (!(f1.group() == f2.group())) return false;
  detail::check_group_order(f1.group());
  std::size_t k = f1.group().length();
  std::vector<GroupElement> gens(k, GroupElement(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) gens[i][i] = 1;
  return detail::isomorphism_exists(
      f1.group(), f2.group(),
      [&](std::size_t i, const GroupElement& cand) {
        return f2.eval(cand) == f1.eval(gens[i]);
      },
      [&](std::size_t i, std::size_t j, const GroupElement& a, const GroupElement& b) {
        return f2.bilinear().eval(a, b) == f1.bilinear().eval(gens[i], gens[j]);
      });
}

// Argument of the normalized Gauss sum sum_x exp(pi*i*q(x)) as a residue
// mod 8. For the discriminant form of an even lattice this equals the
// index mod 8.
inline int milgram_signature(const FiniteQuadraticForm& f) {
  detail::check_group_order(f.group());
  // exponent of exp(2*pi*i * q(x)/2): collect q(x)/2 as fractions of n
  std::vector<Rational> values;
  for_each_element(f.group(), [&](const GroupElement& x) { values.push_back(f.eval(x)); });
  Integer n = 8;
  for (const Rational& q : values) n = lcm_of(n, 2 * denominator(q));
  std::vector<Integer> coeff(n.convert_to<std::size_t>(), Integer(0));
  for (const Rational& q : values) {
    Integer k = numerator(q) * (n / (2 * denominator(q))) % n;
    if (k < 0) k += n;
    coeff[k.convert_to<std::size_t>()] += 1;
  }
  detail::FxComplex s = detail::fx_exponential_sum(coeff, n);
  int sigma = detail::fx_eighth_root_argument(s, f.group().order());
  if (sigma < 0)
    fail(errc::non_unit_gauss_sum, "Gauss sum is not sqrt(|A|) times an 8th root of unity");
  return sigma;
}

// "<a/n> (+) <b/m>" rendering of the generator diagonal; `mod_z` reduces
// quadratic values into [0,1) for texts that write them modulo Z.
inline std::string render(const FiniteBilinearForm& f) {
  if (f.group().trivial()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.group().length(); ++i) {
    if (!out.empty()) out += " (+) ";
    out += "<" + to_string(f.values()(i, i)) + ">";
  }
  return out;
}

inline std::string render(const FiniteQuadraticForm& f, bool mod_z = false) {
  if (f.group().trivial()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.group().length(); ++i) {
    if (!out.empty()) out += " (+) ";
    Rational v = mod_z ? mod_one(f.qvalues()[i]) : f.qvalues()[i];
    out += "<" + to_string(v) + ">";
  }
  return out;
}

}  // namespace primlat
