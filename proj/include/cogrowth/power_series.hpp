#pragma once

#include <vector>

#include "cogrowth/numeric.hpp"

namespace cogrowth {

// Truncated formal power series over the rationals.  A series of order N
// stores the coefficients of z^0 .. z^N exactly; every arithmetic operation
// truncates to the smaller order of its operands, so equality of two results
// means equality of all jointly-represented coefficients.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1, Rat(0)) {}
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Rat> coeffs, int order);

  static PowerSeries zero(int order) { return PowerSeries(order); }
  static PowerSeries one(int order);
  // The monomial c * z^k truncated at `order`.
  static PowerSeries monomial(const Rat &c, int k, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat &coeff(int k) const;
  void set_coeff(int k, const Rat &value);
  const std::vector<Rat> &coefficients() const { return coeffs_; }

  bool is_zero() const;

  PowerSeries truncated(int order) const;

  PowerSeries operator-() const;
  PowerSeries operator+(const PowerSeries &other) const;
  PowerSeries operator-(const PowerSeries &other) const;
  PowerSeries operator*(const PowerSeries &other) const;
  PowerSeries scaled(const Rat &c) const;
  // Multiplication by z^k (drops overflowing coefficients, keeps the order).
  PowerSeries shifted(int k) const;

  // Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  PowerSeries operator/(const PowerSeries &other) const;

  // Integer power by repeated multiplication.
  PowerSeries pow(unsigned long e) const;

  // Substitute z -> c*z^m (m >= 1); order is preserved.
  PowerSeries compose_monomial(const Rat &c, int m) const;

  bool operator==(const PowerSeries &other) const;
  bool operator!=(const PowerSeries &other) const { return !(*this == other); }

 private:
  std::vector<Rat> coeffs_;  // index k holds the coefficient of z^k
};

}  // namespace cogrowth
