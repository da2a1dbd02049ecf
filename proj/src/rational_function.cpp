#include "cogrowth/rational_function.hpp"

#include <stdexcept>

namespace cogrowth {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Poly target = den_.primitive_normal();
  // target = s * den_ for a unique positive-or-negative rational s; divide it
  // out of the numerator so the value of the fraction is unchanged.
  int k = 0;
  while (den_[k] == 0) ++k;
  const Rat s = target[k] / den_[k];
  den_ = target;
  num_ = num_ * s;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction &o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction &o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction &o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction &o) const {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::scaled(const Rat &c) const {
  return RationalFunction(num_ * c, den_);
}

Rat RationalFunction::eval(const Rat &x) const {
  const Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole of a rational function");
  return num_.eval(x) / d;
}

PowerSeries RationalFunction::taylor(int order) const {
  if (den_[0] == 0)
    throw std::domain_error("Maclaurin expansion of a rational function with a pole at 0");
  PowerSeries n(order), d(order);
  for (int i = 0; i <= num_.degree() && i <= order; ++i) n.set_coeff(i, num_[i]);
  for (int i = 0; i <= den_.degree() && i <= order; ++i) d.set_coeff(i, den_[i]);
  return n * d.inverse();
}

RationalFunction RationalFunction::substitute_reciprocal(const Int &q) const {
  if (q <= 0) throw std::invalid_argument("reciprocal substitution needs q >= 1");
  const int m = std::max(num_.degree(), den_.degree());
  if (is_zero()) return RationalFunction();
  // z^m * P(1/(q z)) is the polynomial whose z^(m-i) coefficient is p_i q^-i.
  auto lift = [&](const Poly &p) {
    std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
    Rat qp(1);
    for (int i = 0; i <= p.degree(); ++i) {
      c[static_cast<size_t>(m - i)] = p[i] / qp;
      qp *= Rat(q);
    }
    return Poly(std::move(c));
  };
  return RationalFunction(lift(num_), lift(den_));
}

std::string RationalFunction::to_string(const std::string &var) const {
  if (den_ == Poly(Rat(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace cogrowth
