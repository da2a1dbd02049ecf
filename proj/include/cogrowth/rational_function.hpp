#pragma once

#include "cogrowth/numeric.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/power_series.hpp"

namespace cogrowth {

// Exact rational function N(z)/D(z) kept in a unique canonical form: the
// fraction is reduced (gcd(N, D) = 1) and the denominator is the integer
// primitive representative with positive lowest-order nonzero coefficient.
// Equality of canonical forms is therefore equality of functions.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(const Poly &p) : RationalFunction(p, Poly(Rat(1))) {}
  static RationalFunction constant(const Rat &c) { return RationalFunction(Poly(c)); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction &o) const;
  RationalFunction operator-(const RationalFunction &o) const;
  RationalFunction operator*(const RationalFunction &o) const;
  RationalFunction operator/(const RationalFunction &o) const;
  RationalFunction scaled(const Rat &c) const;

  // Throws std::domain_error when x is a pole.
  Rat eval(const Rat &x) const;

  // Maclaurin expansion to the given order; requires D(0) != 0.
  PowerSeries taylor(int order) const;

  // The rational function f(1/(q z)), canonicalized.
  RationalFunction substitute_reciprocal(const Int &q) const;

  bool operator==(const RationalFunction &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction &o) const { return !(*this == o); }

  std::string to_string(const std::string &var = "z") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace cogrowth
