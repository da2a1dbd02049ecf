#include <random>

#include "cogrowth/chebyshev.hpp"
#include "doctest.h"

using namespace cogrowth;

TEST_CASE("first Chebyshev polynomials of the second kind") {
  CHECK(chebyshev_u(0) == Poly::from_ints({1}));
  CHECK(chebyshev_u(1) == Poly::from_ints({0, 2}));
  CHECK(chebyshev_u(2) == Poly::from_ints({-1, 0, 4}));
  CHECK(chebyshev_u(3) == Poly::from_ints({0, -4, 0, 8}));
  CHECK(chebyshev_u(4) == Poly::from_ints({1, 0, -12, 0, 16}));
  CHECK(chebyshev_u(5) == Poly::from_ints({0, 6, 0, -32, 0, 32}));
}

TEST_CASE("cache returns stable references under growth") {
  const Poly &u3 = chebyshev_u(3);
  const Poly u3_copy = u3;
  (void)chebyshev_u(120);  // force the cache to grow
  CHECK(u3 == u3_copy);
  CHECK(&chebyshev_u(3) == &u3);
}

TEST_CASE("recurrence holds for all cached degrees") {
  const Poly two_x = Poly::from_ints({0, 2});
  for (int n = 1; n <= 60; ++n)
    CHECK(chebyshev_u(n + 1) == two_x * chebyshev_u(n) - chebyshev_u(n - 1));
  CHECK_THROWS(chebyshev_u(-1));
}

TEST_CASE("degree and parity") {
  for (int n = 0; n <= 50; ++n) {
    const Poly &u = chebyshev_u(n);
    CHECK(u.degree() == n);
    CHECK(u.leading() == rat_pow(Rat(2), static_cast<unsigned long>(n)));
    for (int i = 0; i <= n; ++i) {
      if ((n - i) % 2 != 0) CHECK(u[i] == Rat(0));
    }
    // U_n(1) = n+1 and U_n(-1) = (-1)^n (n+1).
    CHECK(u.eval(Rat(1)) == Rat(n + 1));
    CHECK(u.eval(Rat(-1)) == (n % 2 == 0 ? Rat(n + 1) : Rat(-(n + 1))));
  }
}

TEST_CASE("combination C_n = U_n - U_{n-2}/q keeps only the parity of n") {
  const Int q(3);
  CHECK(chebyshev_combination(0, q) == chebyshev_u(0));
  CHECK(chebyshev_combination(1, q) == chebyshev_u(1));
  for (int n = 2; n <= 40; ++n) {
    const Poly c = chebyshev_combination(n, q);
    CHECK(c == chebyshev_u(n) - chebyshev_u(n - 2) * Rat(1, 3));
    CHECK(c.degree() == n);
    for (int i = 0; i <= n; ++i) {
      if ((n - i) % 2 != 0) CHECK(c[i] == Rat(0));
    }
  }
  // C_2 = U_2 - 1/q = 4x^2 - 1 - 1/3 for q = 3.
  CHECK(chebyshev_combination(2, q) ==
        Poly(std::vector<Rat>{Rat(-4, 3), Rat(0), Rat(4)}));
  CHECK_THROWS(chebyshev_combination(2, Int(0)));
}

TEST_CASE("closed form at rational points") {
  // Spot values: t = 2 gives x = 5/4, U_2(5/4) = 4*(25/16) - 1 = 21/4
  // and (t^3 - t^-3)/(t - 1/t) = (8 - 1/8)/(3/2) = 21/4.
  CHECK(closed_form_check(2, Rat(2)));
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int trial = 0; trial < 20; ++trial) {
    long a = num(rng);
    long b = den(rng);
    if (a == 0 || a == b || a == -b) a = b + 1;
    const Rat t(a, b);
    for (int n = 0; n <= 50; n += 7) CHECK(closed_form_check(n, t));
  }
  CHECK_THROWS(closed_form_check(2, Rat(0)));
  CHECK_THROWS(closed_form_check(2, Rat(1)));
  CHECK_THROWS(closed_form_check(2, Rat(-1)));
}

TEST_CASE("generating function identity to order 25") {
  CHECK(generating_identity_check(25));
  CHECK(generating_identity_check(1));
}

TEST_CASE("growth bounds inside and outside the unit interval") {
  for (int m = 0; m <= 50; m += 5) {
    CHECK(growth_bound_check(m, Rat(0)));
    CHECK(growth_bound_check(m, Rat(1, 2)));
    CHECK(growth_bound_check(m, Rat(1)));
    CHECK(growth_bound_check(m, Rat(5, 4)));
    CHECK(growth_bound_check(m, Rat(2)));
    CHECK(growth_bound_check(m, Rat(100, 7)));
  }
  CHECK_THROWS(growth_bound_check(2, Rat(-1, 2)));
}
