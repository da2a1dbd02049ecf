#include "cogrowth/polynomial.hpp"

#include <stdexcept>
#include <tuple>

namespace cogrowth {

namespace {
const Rat kZero(0);
}

Poly::Poly(const Rat &constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, const Rat &coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (coeff == 0) return Poly();
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat &Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat &Poly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat &v : r.c_) v = -v;
  return r;
}

Poly Poly::operator+(const Poly &o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly &o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly &o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rat &s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (Rat &v : r.c_) v *= s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly &d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(), r};
  std::vector<Rat> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rat(0));
  Rat lead_inv = 1 / d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rat f = r.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    // r -= f * z^shift * d
    std::vector<Rat> rc = r.c_;
    for (int i = 0; i <= d.degree(); ++i)
      rc[static_cast<std::size_t>(i + shift)] -= f * d[i];
    r = Poly(std::move(rc));
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::operator/(const Poly &d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly &d) const { return divmod(d).second; }

Rat Poly::eval(const Rat &x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (1 / leading());
}

Poly Poly::primitive_normal() const {
  if (is_zero()) return Poly();
  // Scale by the lcm of denominators, then divide by the gcd of numerators.
  Int den_lcm = 1;
  for (const Rat &v : c_) {
    Int d = v.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Int num_gcd = 0;
  for (const Rat &v : c_) {
    Rat scaled = v * Rat(den_lcm);
    Int n = scaled.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat factor = Rat(den_lcm) / Rat(num_gcd);
  Poly r = *this * factor;
  // Sign: lowest-order nonzero coefficient positive.
  for (const Rat &v : r.c_) {
    if (v == 0) continue;
    if (v < 0) r = -r;
    break;
  }
  return r;
}

std::vector<Int> Poly::primitive_integer_coeffs() const {
  Poly p = primitive_normal();
  std::vector<Int> out;
  out.reserve(p.c_.size());
  for (const Rat &v : p.c_) out.push_back(Int(v.get_num()));
  return out;
}

std::string Poly::to_string(const std::string &var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat &v = (*this)[i];
    if (v == 0) continue;
    Rat a = v > 0 ? v : Rat(-v);
    if (!s.empty()) {
      s += v > 0 ? " + " : " - ";
    } else if (v < 0) {
      s += "-";
    }
    bool unit = (a == 1);
    if (i == 0) {
      s += a.get_str();
    } else {
      if (!unit) s += a.get_str() + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    // Normalizing each remainder keeps coefficient growth in check.
    b = r.monic();
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly &a, const Poly &b) {
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  Poly r0 = a, r1 = b;
  Poly u0(Rat(1)), u1;
  Poly v0, v1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rat s = 1 / r0.leading();
  return {r0 * s, u0 * s, v0 * s};
}

Poly kernel_lift(const Poly &p, const Rat &c) {
  if (p.is_zero()) return Poly();
  const int deg = p.degree();
  const Poly kernel = Poly::monomial(2, c) + Poly(Rat(1));
  Poly acc;
  Poly kernel_pow(Rat(1));
  for (int j = 0; j <= deg; ++j) {
    if (p[j] != 0) acc = acc + kernel_pow * Poly::monomial(deg - j, p[j]);
    if (j < deg) kernel_pow = kernel_pow * kernel;
  }
  return acc;
}

}  // namespace cogrowth
