#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cogrowth {

using Int = mpz_class;
using Rat = mpq_class;

// base^e for e >= 0.
inline Int int_pow(const Int &base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for any integer e (base != 0 when e < 0).
inline Rat rat_pow(const Rat &base, long e) {
  if (e >= 0) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  Rat inv = 1 / base;
  return rat_pow(inv, -e);
}

// Overflow-safe conversion: exact mantissa/exponent split instead of mpz_get_d,
// so values beyond double range still give a finite, accurate result in log space.
inline double log2_of(const Int &v) {
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::abs(d)) + static_cast<double>(exp);
}

inline double to_double(const Int &v) { return mpz_get_d(v.get_mpz_t()); }
inline double to_double(const Rat &v) { return mpq_get_d(v.get_mpq_t()); }

// Ratio a/b as double via the exact rational (safe for huge a, b).
inline double ratio_as_double(const Int &a, const Int &b) {
  Rat r(a, b);
  r.canonicalize();
  return to_double(r);
}

// v^(1/k) as double, computed in log space so huge integers do not overflow.
inline double root_as_double(const Int &v, unsigned k) {
  if (sgn(v) == 0) return 0.0;
  return std::exp2(log2_of(v) / static_cast<double>(k));
}

// Rational upper bound on sqrt(d) for d >= 0: Newton from above converges
// monotonically downward, so every iterate is a valid majorant.
inline Rat sqrt_upper(const Rat &d, int iters = 12) {
  if (sgn(d) < 0) throw std::invalid_argument("sqrt_upper: negative argument");
  if (sgn(d) == 0) return Rat(0);
  Rat s = (d + 1) / 2;
  if (s * s < d) s = d;  // d < 1: (d+1)/2 still >= sqrt(d); keep the guard anyway
  for (int i = 0; i < iters; ++i) s = (s + d / s) / 2;
  return s;
}

// Rational lower bound on sqrt(d): d / upper(sqrt(d)).
inline Rat sqrt_lower(const Rat &d, int iters = 12) {
  if (sgn(d) <= 0) return Rat(0);
  return d / sqrt_upper(d, iters);
}

inline std::string to_string(const Int &v) { return v.get_str(); }
inline std::string to_string(const Rat &v) { return v.get_str(); }

}  // namespace cogrowth
