#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ppart {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) by the falling-factorial product; defined for every integer n,
/// zero when k < 0.
inline Integer binomial_product(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// C(n, k) with the counting convention: zero unless 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

}  // namespace ppart
