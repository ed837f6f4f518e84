#pragma once

// Fixed-point evaluation of sums of roots of unity, used to read off the
// argument of a Gauss sum. All arithmetic is integer arithmetic on values
// scaled by 2^kShift; truncation errors stay far below the decision
// margins, which are checked at runtime.

#include <cstddef>
#include <vector>

#include "primlat/numeric.hpp"

namespace primlat::detail {

constexpr unsigned kShift = 128;

inline Integer fx_one() { return Integer(1) << kShift; }

inline Integer fx_from_int(const Integer& n) { return n << kShift; }

inline Integer fx_mul(const Integer& a, const Integer& b) {
  return (a * b) >> kShift;
}

// sqrt(a / 2^S) in fixed point = isqrt(a * 2^S).
inline Integer fx_sqrt(const Integer& a) { return isqrt(a << kShift); }

// Machin's formula; truncation of the alternating series keeps the error
// below one ulp per term.
inline Integer fx_atan_inv(long x) {
  Integer xx = Integer(x) * x;
  Integer power = Integer(x);  // x^(2k+1)
  Integer acc = 0;
  int sign = 1;
  for (long k = 0;; ++k) {
    Integer term = fx_one() / (power * (2 * k + 1));
    if (term == 0) break;
    acc += sign * term;
    sign = -sign;
    power *= xx;
  }
  return acc;
}

inline const Integer& fx_pi() {
  static const Integer pi = 16 * fx_atan_inv(5) - 4 * fx_atan_inv(239);
  return pi;
}

struct FxComplex {
  Integer re, im;
};

// cos + i sin of 2*pi/n for n >= 8, via Taylor series of the small angle.
inline FxComplex fx_root_of_unity(const Integer& n) {
  Integer theta = (2 * fx_pi()) / n;
  Integer theta2 = fx_mul(theta, theta);
  Integer cos_acc = 0, sin_acc = 0;
  Integer term = fx_one();
  // cos: sum (-1)^k theta^(2k) / (2k)!
  for (long k = 0;; ++k) {
    if (term == 0) break;
    cos_acc += (k % 2 == 0) ? term : -term;
    term = fx_mul(term, theta2) / ((2 * k + 1) * (2 * k + 2));
  }
  term = theta;
  for (long k = 0;; ++k) {
    if (term == 0) break;
    sin_acc += (k % 2 == 0) ? term : -term;
    term = fx_mul(term, theta2) / ((2 * k + 2) * (2 * k + 3));
  }
  return {cos_acc, sin_acc};
}

// Sum of coeff[k] * exp(2*pi*i*k/n) for k = 0..n-1.
inline FxComplex fx_exponential_sum(const std::vector<Integer>& coeff, const Integer& n) {
  FxComplex base = fx_root_of_unity(n);
  FxComplex z{fx_one(), Integer(0)};
  FxComplex acc{Integer(0), Integer(0)};
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k] != 0) {
      acc.re += coeff[k] * z.re;
      acc.im += coeff[k] * z.im;
    }
    Integer re = fx_mul(z.re, base.re) - fx_mul(z.im, base.im);
    Integer im = fx_mul(z.re, base.im) + fx_mul(z.im, base.re);
    z.re = re;
    z.im = im;
  }
  return acc;
}

// Decide which eighth root of unity sqrt(order) * zeta_8^sigma the sum s
// equals; -1 when the sum is not within tolerance of any candidate.
inline int fx_eighth_root_argument(const FxComplex& s, const Integer& order) {
  Integer sqrt_order = fx_sqrt(fx_from_int(order));
  Integer half_sqrt2 = fx_sqrt(fx_from_int(2)) >> 1;
  static const int cos_tab[8] = {2, 1, 0, -1, -2, -1, 0, 1};  // in units of half_sqrt2
  static const int sin_tab[8] = {0, 1, 2, 1, 0, -1, -2, -1};
  // tolerance: |s - target|^2 <= order / 10^4 (targets are ~0.77*sqrt(order) apart)
  Integer tol = (order << (2 * kShift)) / 10000;
  int best = -1;
  Integer best_d2;
  for (int sigma = 0; sigma < 8; ++sigma) {
    Integer tre = cos_tab[sigma] == 2    ? sqrt_order
                  : cos_tab[sigma] == -2 ? -sqrt_order
                                         : cos_tab[sigma] * fx_mul(sqrt_order, half_sqrt2);
    Integer tim = sin_tab[sigma] == 2    ? sqrt_order
                  : sin_tab[sigma] == -2 ? -sqrt_order
                                         : sin_tab[sigma] * fx_mul(sqrt_order, half_sqrt2);
    Integer dre = s.re - tre, dim = s.im - tim;
    Integer d2 = dre * dre + dim * dim;
    if (best < 0 || d2 < best_d2) { best = sigma; best_d2 = d2; }
  }
  if (best_d2 > tol) return -1;
  return best;
}

}  // namespace primlat::detail
