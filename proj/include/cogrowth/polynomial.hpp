#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cogrowth/numeric.hpp"

namespace cogrowth {

// Univariate polynomial with exact big-rational coefficients, stored in
// ascending degree order with a nonzero trailing coefficient (the zero
// polynomial has an empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat &constant);
  explicit Poly(std::vector<Rat> coeffs);  // normalizes trailing zeros away
  static Poly monomial(int degree, const Rat &coeff);
  static Poly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of z^i (zero beyond the degree).
  const Rat &operator[](int i) const;
  const std::vector<Rat> &coeffs() const { return c_; }
  const Rat &leading() const;

  friend bool operator==(const Poly &, const Poly &) = default;

  Poly operator-() const;
  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator*(const Rat &s) const;
  Poly pow(unsigned e) const;

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly &d) const;
  Poly operator/(const Poly &d) const;  // quotient part of divmod
  Poly operator%(const Poly &d) const;

  Rat eval(const Rat &x) const;
  double eval_double(double x) const;
  Poly derivative() const;

  // Monic scalar multiple (zero stays zero).
  Poly monic() const;

  // The unique rational multiple with coprime integer coefficients whose
  // lowest-order nonzero coefficient is positive.
  Poly primitive_normal() const;

  // Integer coefficient list of primitive_normal(), ascending.
  std::vector<Int> primitive_integer_coeffs() const;

  std::string to_string(const std::string &var = "z") const;

  static Poly gcd(Poly a, Poly b);  // monic gcd
  // Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly &a, const Poly &b);

 private:
  void trim();
  std::vector<Rat> c_;
};

// z^(deg p) * p((c z^2 + 1)/z): clears the substitution u = (c z^2 + 1)/z
// into a polynomial in z of degree 2 deg p.  Multiplicative in p.
Poly kernel_lift(const Poly &p, const Rat &c);

}  // namespace cogrowth
