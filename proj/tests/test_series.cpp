#include <stdexcept>
#include <vector>

#include "cogrowth/power_series.hpp"
#include "cogrowth/rational_function.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

PowerSeries geometric(const Rat &a, int order) {
  // 1/(1 - a z)
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  Rat p(1);
  for (auto &x : c) {
    x = p;
    p *= a;
  }
  return PowerSeries(std::move(c), order);
}

}  // namespace

TEST_CASE("power series basics") {
  const PowerSeries one = PowerSeries::one(5);
  CHECK(one.order() == 5);
  CHECK(one.coeff(0) == Rat(1));
  CHECK(one.coeff(5) == Rat(0));
  CHECK(PowerSeries::zero(3).is_zero());
  const PowerSeries m = PowerSeries::monomial(Rat(2), 3, 6);
  CHECK(m.coeff(3) == Rat(2));
  CHECK(m.coeff(2) == Rat(0));
  CHECK_FALSE(m.is_zero());
  CHECK(PowerSeries::monomial(Rat(2), 9, 6).is_zero());  // beyond the order
  CHECK_THROWS(one.coeff(6));
}

TEST_CASE("arithmetic truncates to the smaller order") {
  const PowerSeries a = geometric(Rat(1), 10);
  const PowerSeries b = geometric(Rat(2), 6);
  CHECK((a + b).order() == 6);
  CHECK((a * b).order() == 6);
  CHECK((a - a).is_zero());
  CHECK(a.truncated(4).order() == 4);
  CHECK(a.truncated(15).order() == 15);
  CHECK(a.truncated(15).coeff(15) == Rat(0));
}

TEST_CASE("geometric series inverts 1 - z") {
  const int order = 12;
  PowerSeries lin = PowerSeries::one(order) - PowerSeries::monomial(Rat(1), 1, order);
  const PowerSeries geo = geometric(Rat(1), order);
  CHECK(lin * geo == PowerSeries::one(order));
  CHECK(lin.inverse() == geo);
  CHECK(geo.inverse() == lin);
  CHECK(PowerSeries::one(order) / lin == geo);
  CHECK_THROWS(PowerSeries::zero(3).inverse());
  CHECK_THROWS((PowerSeries::monomial(Rat(1), 1, 3)).inverse());
}

TEST_CASE("scaled, shifted, pow, compose_monomial") {
  const PowerSeries g = geometric(Rat(3), 8);
  CHECK(g.scaled(Rat(1, 3)).coeff(2) == Rat(3));
  const PowerSeries sh = g.shifted(2);
  CHECK(sh.order() == 8);
  CHECK(sh.coeff(0) == Rat(0));
  CHECK(sh.coeff(1) == Rat(0));
  CHECK(sh.coeff(2) == Rat(1));
  CHECK(sh.coeff(5) == Rat(27));
  // (1/(1-z))^2 = sum (n+1) z^n
  const PowerSeries sq = geometric(Rat(1), 8).pow(2);
  for (int n = 0; n <= 8; ++n) CHECK(sq.coeff(n) == Rat(n + 1));
  CHECK(g.pow(0) == PowerSeries::one(8));
  // Substituting z -> 2 z^2 into 1/(1-3z) gives 1/(1-6z^2).
  const PowerSeries comp = g.compose_monomial(Rat(2), 2);
  CHECK(comp.order() == 8);
  for (int n = 0; n <= 8; ++n) {
    if (n % 2 == 0)
      CHECK(comp.coeff(n) == rat_pow(Rat(6), static_cast<unsigned long>(n / 2)));
    else
      CHECK(comp.coeff(n) == Rat(0));
  }
}

TEST_CASE("rational function canonical form") {
  const RationalFunction f(Poly::from_ints({1, 1}), Poly::from_ints({1, -3}));
  const RationalFunction g(Poly::from_ints({2, 2}), Poly::from_ints({2, -6}));
  CHECK(f == g);
  CHECK(f.den() == Poly::from_ints({1, -3}));
  // Common factors cancel.
  const RationalFunction h(Poly::from_ints({1, 1}) * Poly::from_ints({-1, 1}),
                           Poly::from_ints({1, -3}) * Poly::from_ints({-1, 1}));
  CHECK(h == f);
  // Denominator sign is normalized into the numerator.
  const RationalFunction s(Poly::from_ints({1}), Poly::from_ints({-1, 3}));
  CHECK(s.den() == Poly::from_ints({1, -3}));
  CHECK(s.num() == Poly::from_ints({-1}));
  CHECK_THROWS(RationalFunction(Poly(Rat(1)), Poly()));
}

TEST_CASE("rational function field arithmetic") {
  const RationalFunction z(Poly::from_ints({0, 1}));
  const RationalFunction one = RationalFunction::constant(Rat(1));
  const RationalFunction f = one / (one - z);          // 1/(1-z)
  const RationalFunction g = one / (one + z);          // 1/(1+z)
  CHECK(f + g == RationalFunction(Poly::from_ints({2}), Poly::from_ints({1, 0, -1})));
  CHECK(f * g == RationalFunction(Poly::from_ints({1}), Poly::from_ints({1, 0, -1})));
  CHECK(f - f == RationalFunction());
  CHECK((f / g) == RationalFunction(Poly::from_ints({1, 1}), Poly::from_ints({1, -1})));
  CHECK((-f).num() == Poly::from_ints({-1}));
  CHECK(f.scaled(Rat(3)).num() == Poly::from_ints({3}));
}

TEST_CASE("evaluation and poles") {
  const RationalFunction f(Poly::from_ints({1, 1}), Poly::from_ints({1, -3}));
  CHECK(f.eval(Rat(0)) == Rat(1));
  CHECK(f.eval(Rat(1, 6)) == Rat(7, 3));
  CHECK_THROWS_AS(f.eval(Rat(1, 3)), std::domain_error);
}

TEST_CASE("taylor expansion") {
  const RationalFunction f(Poly::from_ints({1, 1}), Poly::from_ints({1, -3}));
  const PowerSeries t = f.taylor(10);
  CHECK(t.order() == 10);
  CHECK(t.coeff(0) == Rat(1));
  // (1+z)/(1-3z) = 1 + 4z + 12z^2 + ... = 1 + sum 4*3^(n-1) z^n.
  for (int n = 1; n <= 10; ++n)
    CHECK(t.coeff(n) == Rat(4) * rat_pow(Rat(3), static_cast<unsigned long>(n - 1)));
  // Pole at zero is rejected.
  CHECK_THROWS(RationalFunction(Poly(Rat(1)), Poly::from_ints({0, 1})).taylor(3));
}

TEST_CASE("substitute_reciprocal") {
  // f(z) = z/(2(1+3z^2)) is invariant under z -> 1/(3z).
  const RationalFunction f(Poly::from_ints({0, 1}), Poly::from_ints({2, 0, 6}));
  CHECK(f.substitute_reciprocal(Int(3)) == f);
  // The constant function is always invariant.
  const RationalFunction c = RationalFunction::constant(Rat(5, 7));
  CHECK(c.substitute_reciprocal(Int(3)) == c);
  CHECK(RationalFunction().substitute_reciprocal(Int(3)) == RationalFunction());
  // A non-invariant example transforms as computed by hand:
  // f = 1/(1-z)  ->  1/(1 - 1/(3z)) = 3z/(3z - 1).
  const RationalFunction g(Poly::from_ints({1}), Poly::from_ints({1, -1}));
  CHECK(g.substitute_reciprocal(Int(3)) ==
        RationalFunction(Poly::from_ints({0, 3}), Poly::from_ints({-1, 3})));
  // An involution up to the group law: applying it twice is the identity.
  const RationalFunction h(Poly::from_ints({1, 2, 5}), Poly::from_ints({1, 0, 0, 7}));
  CHECK(h.substitute_reciprocal(Int(3)).substitute_reciprocal(Int(3)) == h);
}

TEST_CASE("to_string smoke") {
  const RationalFunction f(Poly::from_ints({1, 1}), Poly::from_ints({1, -3}));
  CHECK(f.to_string() == "(z + 1) / (-3*z + 1)");
}
