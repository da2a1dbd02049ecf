#include "cogrowth/identities.hpp"

#include <stdexcept>

#include "cogrowth/chebyshev.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/power_series.hpp"

namespace cogrowth {

IdentityCheckResult grigorchuk_identity_check(const CountTable &t, int order) {
  if (order < 1) throw std::invalid_argument("identity check needs order >= 1");
  if (static_cast<int>(t.gamma.size()) <= order ||
      static_cast<int>(t.walk.size()) < order)
    throw std::invalid_argument("count table too short for the requested order");

  PowerSeries gamma_series(order);
  for (int n = 0; n <= order; ++n) gamma_series.set_coeff(n, Rat(t.gamma[static_cast<size_t>(n)]));
  const PowerSeries one_minus_z2 =
      PowerSeries::one(order) - PowerSeries::monomial(Rat(1), 2, order);
  const PowerSeries lhs = gamma_series.shifted(1) * one_minus_z2.inverse();

  // sum_n W_n b^(n+1) with b = z/(q z^2 + 1); the n-th term starts at z^(n+1),
  // so terms with n >= order cannot touch the compared coefficients.
  const PowerSeries kernel =
      PowerSeries::one(order) + PowerSeries::monomial(Rat(t.q), 2, order);
  const PowerSeries b = kernel.inverse().shifted(1);
  PowerSeries rhs(order);
  PowerSeries term = b;
  for (int n = 0; n < order; ++n) {
    rhs = rhs + term.scaled(Rat(t.walk[static_cast<size_t>(n)]));
    if (n + 1 < order) term = term * b;
  }

  IdentityCheckResult result;
  for (int i = 0; i <= order; ++i) {
    const Rat diff = lhs.coeff(i) - rhs.coeff(i);
    if (diff != 0) {
      result.pass = false;
      result.failed_at = i;
      result.residual = diff;
      break;
    }
  }
  return result;
}

bool chebyshev_moment_check(const CountTable &t, int n) {
  if (n < 2 || n > t.n_max || static_cast<int>(t.walk.size()) <= n)
    throw std::invalid_argument("moment check needs 2 <= n <= n_max with walk data");
  const Int q(t.q);
  const Poly c_n = chebyshev_combination(n, q);
  Rat acc(0);
  for (int k = 0; k <= c_n.degree(); ++k) {
    const Rat &coeff = c_n[k];
    if (coeff == 0) continue;
    if ((n - k) % 2 != 0)
      throw CogrowthError("moment check: parity violation in the Chebyshev combination");
    acc += coeff * Rat(t.walk[static_cast<size_t>(k)]) *
           Rat(int_pow(q, static_cast<unsigned long>((n - k) / 2))) /
           Rat(int_pow(Int(2), static_cast<unsigned long>(k)));
  }
  return acc == Rat(t.gamma[static_cast<size_t>(n)]);
}

std::optional<int> chebyshev_moment_first_failure(const CountTable &t, int n_lo, int n_hi) {
  for (int n = n_lo; n <= n_hi; ++n)
    if (!chebyshev_moment_check(t, n)) return n;
  return std::nullopt;
}

bool functional_equation_check(const RationalFunction &gamma, const Int &q) {
  const RationalFunction z(Poly::monomial(1, Rat(1)));
  const RationalFunction one_minus_z2(Poly(Rat(1)) - Poly::monomial(2, Rat(1)));
  const RationalFunction phi = z * gamma / one_minus_z2;
  return phi.substitute_reciprocal(q) == phi;
}

}  // namespace cogrowth
