#include "cogrowth/chebyshev.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace cogrowth {

namespace {
// deque keeps references to cached entries valid while the cache grows.
std::deque<Poly> &u_cache() {
  static std::deque<Poly> cache = {Poly(Rat(1)), Poly::monomial(1, Rat(2))};
  return cache;
}
std::mutex u_mutex;
}  // namespace

const Poly &chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: negative degree");
  std::lock_guard<std::mutex> lock(u_mutex);
  auto &cache = u_cache();
  const Poly two_x = Poly::monomial(1, Rat(2));
  while (static_cast<int>(cache.size()) <= n) {
    const size_t k = cache.size();
    cache.push_back(two_x * cache[k - 1] - cache[k - 2]);
  }
  return cache[static_cast<size_t>(n)];
}

Poly chebyshev_combination(int n, const Int &q) {
  if (n < 0) throw std::invalid_argument("chebyshev_combination: negative degree");
  if (q <= 0) throw std::invalid_argument("chebyshev_combination: q must be positive");
  if (n < 2) return chebyshev_u(n);
  return chebyshev_u(n) - chebyshev_u(n - 2) * Rat(1, q);
}

bool closed_form_check(int n, const Rat &t) {
  if (t == 0 || t == 1 || t == -1)
    throw std::invalid_argument("closed_form_check: t must avoid 0 and +-1");
  const Rat x = (t + Rat(1) / t) / 2;
  const Rat lhs = chebyshev_u(n).eval(x);
  const Rat tn = rat_pow(t, n + 1);
  const Rat rhs = (tn - Rat(1) / tn) / (t - Rat(1) / t);
  return lhs == rhs;
}

bool generating_identity_check(int order) {
  if (order < 1) throw std::invalid_argument("generating_identity_check: order must be >= 1");
  // Coefficient of w^k in (1 - 2xw + w^2) * sum U_n w^n is
  // U_k - 2x U_{k-1} + U_{k-2}; it must vanish for 1 <= k <= order and the
  // constant term must be 1.
  const Poly two_x = Poly::monomial(1, Rat(2));
  if (chebyshev_u(0) != Poly(Rat(1))) return false;
  for (int k = 1; k <= order; ++k) {
    Poly c = chebyshev_u(k) - two_x * chebyshev_u(k - 1);
    if (k >= 2) c = c + chebyshev_u(k - 2);
    if (!c.is_zero()) return false;
  }
  return true;
}

bool growth_bound_check(int m, const Rat &x) {
  if (m < 0 || x < 0)
    throw std::invalid_argument("growth_bound_check: needs m >= 0 and x >= 0");
  Rat lhs = chebyshev_u(m).eval(x);
  if (lhs < 0) lhs = -lhs;
  const Rat mp1(m + 1);
  if (x <= 1) return lhs <= mp1;
  const Rat disc = x * x - 1;
  // Certify with the rational lower bound on the majorant first; a true bound
  // that fails it is retried against the upper bound before reporting false.
  const Rat rhs_low = mp1 * rat_pow(x + sqrt_lower(disc), m);
  if (lhs <= rhs_low) return true;
  const Rat rhs_high = mp1 * rat_pow(x + sqrt_upper(disc), m);
  return lhs <= rhs_high;
}

}  // namespace cogrowth
