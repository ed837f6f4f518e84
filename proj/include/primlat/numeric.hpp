#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals,
// plus the error codes shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace primlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class errc {
  // construction / validation
  non_symmetric,
  degenerate,
  unknown_block,
  zero_scale,
  dimension_mismatch,
  zero_vector,
  not_primitive,
  isotropic_vector,
  no_characteristic_element,
  odd_lattice,
  group_too_large,
  non_unit_gauss_sum,
  noether_non_integral,
  index_non_integral,
  odd_b1,
  negative_pg,
  non_positive_hsq,
  out_of_range,
  unknown_class,
  indefinite_input,
  rank_too_large,
  parse_error,
  io_error,
  // guards: a theorem hypothesis fails, the request is well-formed but
  // outside the range where a unique answer is available
  definite_input,
  even_signature_not_divisible_by_8,
  sign_mismatch,
  characteristic_in_even,
  non_cyclic_disc_group,
  even_parity_index_not_8_divisible,
  positive_definite_total,
  odd_complement_rank_guard,
  exotic_ball_quotient,
  no_consistent_refinement,
  // search limits
  no_ambient_vector_found,
  search_budget_exceeded,
  not_found_within_bound,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_symmetric: return "NonSymmetric";
    case errc::degenerate: return "Degenerate";
    case errc::unknown_block: return "UnknownBlock";
    case errc::zero_scale: return "ZeroScale";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_primitive: return "NotPrimitive";
    case errc::isotropic_vector: return "IsotropicVector";
    case errc::no_characteristic_element: return "NoCharacteristicElement";
    case errc::odd_lattice: return "OddLattice";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::non_unit_gauss_sum: return "NonUnitGaussSum";
    case errc::noether_non_integral: return "NoetherNonIntegral";
    case errc::index_non_integral: return "IndexNonIntegral";
    case errc::odd_b1: return "OddB1";
    case errc::negative_pg: return "NegativePg";
    case errc::non_positive_hsq: return "NonPositiveHsq";
    case errc::out_of_range: return "OutOfRange";
    case errc::unknown_class: return "UnknownClass";
    case errc::indefinite_input: return "IndefiniteInput";
    case errc::rank_too_large: return "RankTooLarge";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::definite_input: return "DefiniteInput";
    case errc::even_signature_not_divisible_by_8: return "EvenSignatureNotDivisibleBy8";
    case errc::sign_mismatch: return "SignMismatch";
    case errc::characteristic_in_even: return "CharacteristicInEven";
    case errc::non_cyclic_disc_group: return "NonCyclicDiscGroup";
    case errc::even_parity_index_not_8_divisible: return "EvenParityIndexNot8Divisible";
    case errc::positive_definite_total: return "PositiveDefiniteTotal";
    case errc::odd_complement_rank_guard: return "OddComplementRankGuard";
    case errc::exotic_ball_quotient: return "ExoticBallQuotient";
    case errc::no_consistent_refinement: return "NoConsistentRefinement";
    case errc::no_ambient_vector_found: return "NoAmbientVectorFound";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::not_found_within_bound: return "NotFoundWithinBound";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

// Process exit category used by the command-line front end:
// 2 = invalid input, 3 = guard / theorem not applicable, 4 = search limit.
inline int exit_category(errc c) {
  switch (c) {
    case errc::definite_input:
    case errc::even_signature_not_divisible_by_8:
    case errc::sign_mismatch:
    case errc::characteristic_in_even:
    case errc::non_cyclic_disc_group:
    case errc::even_parity_index_not_8_divisible:
    case errc::positive_definite_total:
    case errc::odd_complement_rank_guard:
    case errc::exotic_ball_quotient:
    case errc::no_consistent_refinement:
      return 3;
    case errc::no_ambient_vector_found:
    case errc::search_budget_exceeded:
    case errc::not_found_within_bound:
      return 4;
    default:
      return 2;
  }
}

inline int sign_of(const Integer& x) { return x.sign(); }

inline Integer abs_of(const Integer& x) { return boost::multiprecision::abs(x); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

// g = a*x + b*y with g = gcd(a,b) >= 0.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_x = 1, xx = 0;
  Integer old_y = 0, yy = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * xx; old_x = xx; xx = t;
    t = old_y - q * yy; old_y = yy; yy = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

// Canonical representative of r modulo m, in [0, m).
inline Rational mod_m(const Rational& r, const Integer& m) {
  Integer n = numerator(r);
  Integer d = denominator(r);  // always > 0
  Integer md = m * d;
  Integer rem = n % md;
  if (rem < 0) rem += md;
  return Rational(rem, d);
}

inline Rational mod_one(const Rational& r) { return mod_m(r, 1); }
inline Rational mod_two(const Rational& r) { return mod_m(r, 2); }

inline Integer floor_rational(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline Integer ceil_rational(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

// Largest t >= 0 with t*t <= x (x >= 0).
inline Integer isqrt(const Integer& x) {
  if (x < 0) fail(errc::internal, "isqrt of negative value");
  return boost::multiprecision::sqrt(x);
}

// floor(sqrt(p/q)) for a nonnegative rational.
inline Integer floor_sqrt_rational(const Rational& r) {
  Integer p = numerator(r), q = denominator(r);
  if (p < 0) fail(errc::internal, "floor_sqrt_rational of negative value");
  return isqrt(p * q) / q;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace primlat
