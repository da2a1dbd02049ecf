#pragma once

#include "cogrowth/numeric.hpp"
#include "cogrowth/polynomial.hpp"

namespace cogrowth {

// Chebyshev polynomial of the second kind U_n, exact coefficients
// (U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}).  Results are cached.
const Poly &chebyshev_u(int n);

// The combination C_n = U_n - (1/q) U_{n-2} for n >= 2 (C_0 = U_0, C_1 = U_1).
// Its coefficient support sits only on degrees of the same parity as n, which
// is what keeps the moment identity inside the rationals.
Poly chebyshev_combination(int n, const Int &q);

// Exact check of U_n((t + 1/t)/2) == (t^(n+1) - t^-(n+1)) / (t - 1/t)
// for rational t outside {0, 1, -1}.
bool closed_form_check(int n, const Rat &t);

// Formal check, to order N in w, that (1 - 2xw + w^2) * sum_{n<=N} U_n(x) w^n
// has no terms of w-degree 1..N, i.e. the sum is the truncated expansion of
// 1/(1 - 2xw + w^2).  Coefficients live in Q[x], so the check is exact.
bool generating_identity_check(int order);

// Certified check of |U_m(x)| <= m+1 for 0 <= x <= 1, and of
// |U_m(x)| <= (m+1) (x + sqrt(x^2-1))^m for x >= 1.  The square root is
// bracketed by rational bounds so a true bound is never reported false.
bool growth_bound_check(int m, const Rat &x);

}  // namespace cogrowth
