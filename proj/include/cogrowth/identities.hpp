#pragma once

#include <optional>

#include "cogrowth/counting.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/rational_function.hpp"

namespace cogrowth {

// Outcome of an exact coefficient-by-coefficient identity check.
struct IdentityCheckResult {
  bool pass = true;
  // z-order of the first mismatched coefficient when !pass.
  std::optional<int> failed_at;
  // 0 on success; the first nonzero coefficient difference otherwise.
  Rat residual;
};

// Exact check, to order N in z, of the rationalized generating-function
// identity
//   z/(1-z^2) * sum_n gamma_n z^n = sum_n W_n z^(n+1) / (q z^2 + 1)^(n+1).
// (The usual normalization carries powers of 2 sqrt(q); they cancel
// identically, which is what makes the two sides rational.)  Consumes
// gamma_0..gamma_N and W_0..W_(N-1) from the table.
IdentityCheckResult grigorchuk_identity_check(const CountTable &t, int order);

// Exact check of the moment form of the cogrowth coefficient:
//   gamma_n = sum_k c_{n,k} W_k q^((n-k)/2) 2^(-k),
// where C_n = U_n - (1/q) U_{n-2} = sum_k c_{n,k} x^k.  The combination has
// coefficients only for k of the parity of n, so every exponent above is an
// integer.  Requires 2 <= n <= t.n_max.
bool chebyshev_moment_check(const CountTable &t, int n);

// First n in [n_lo, n_hi] failing chebyshev_moment_check, or nullopt.
std::optional<int> chebyshev_moment_first_failure(const CountTable &t, int n_lo, int n_hi);

// Exact check that Phi(z) = z gamma(z)/(1-z^2) is invariant under
// z -> 1/(qz), as canonical rational functions.
bool functional_equation_check(const RationalFunction &gamma, const Int &q);

}  // namespace cogrowth
