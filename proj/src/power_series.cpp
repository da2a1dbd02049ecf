#include "cogrowth/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogrowth {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("power series order must be >= 0");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

PowerSeries::PowerSeries(std::vector<Rat> coeffs, int order) : PowerSeries(order) {
  const size_t n = std::min(coeffs.size(), coeffs_.size());
  for (size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::monomial(const Rat &c, int k, int order) {
  PowerSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<size_t>(k)] = c;
  return s;
}

const Rat &PowerSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("power series coefficient index");
  return coeffs_[static_cast<size_t>(k)];
}

void PowerSeries::set_coeff(int k, const Rat &value) {
  if (k < 0 || k > order()) throw std::out_of_range("power series coefficient index");
  coeffs_[static_cast<size_t>(k)] = value;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat &c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(order);
  const int n = std::min(order, this->order());
  for (int i = 0; i <= n; ++i) s.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s(*this);
  for (auto &c : s.coeffs_) c = -c;
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries &other) const {
  const int n = std::min(order(), other.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i)
    s.coeffs_[static_cast<size_t>(i)] =
        coeffs_[static_cast<size_t>(i)] + other.coeffs_[static_cast<size_t>(i)];
  return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries &other) const {
  const int n = std::min(order(), other.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i)
    s.coeffs_[static_cast<size_t>(i)] =
        coeffs_[static_cast<size_t>(i)] - other.coeffs_[static_cast<size_t>(i)];
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries &other) const {
  const int n = std::min(order(), other.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n && j <= other.order(); ++j) {
      if (other.coeffs_[static_cast<size_t>(j)] == 0) continue;
      s.coeffs_[static_cast<size_t>(i + j)] +=
          coeffs_[static_cast<size_t>(i)] * other.coeffs_[static_cast<size_t>(j)];
    }
  }
  return s;
}

PowerSeries PowerSeries::scaled(const Rat &c) const {
  PowerSeries s(*this);
  for (auto &x : s.coeffs_) x *= c;
  return s;
}

PowerSeries PowerSeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  PowerSeries s(order());
  for (int i = 0; i + k <= order(); ++i)
    s.coeffs_[static_cast<size_t>(i + k)] = coeffs_[static_cast<size_t>(i)];
  return s;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("power series has no inverse: zero constant term");
  const int n = order();
  PowerSeries s(n);
  const Rat c0 = Rat(1) / coeffs_[0];
  s.coeffs_[0] = c0;
  for (int k = 1; k <= n; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j)
      acc += coeffs_[static_cast<size_t>(j)] * s.coeffs_[static_cast<size_t>(k - j)];
    s.coeffs_[static_cast<size_t>(k)] = -acc * c0;
  }
  return s;
}

PowerSeries PowerSeries::operator/(const PowerSeries &other) const {
  const int n = std::min(order(), other.order());
  return truncated(n) * other.truncated(n).inverse();
}

PowerSeries PowerSeries::pow(unsigned long e) const {
  PowerSeries result = PowerSeries::one(order());
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

PowerSeries PowerSeries::compose_monomial(const Rat &c, int m) const {
  if (m < 1) throw std::invalid_argument("monomial substitution needs exponent >= 1");
  PowerSeries s(order());
  Rat cp(1);
  for (int i = 0; i <= order(); ++i) {
    const long long target = static_cast<long long>(i) * m;
    if (target > order()) break;
    if (coeffs_[static_cast<size_t>(i)] != 0)
      s.coeffs_[static_cast<size_t>(target)] = coeffs_[static_cast<size_t>(i)] * cp;
    cp *= c;
  }
  return s;
}

bool PowerSeries::operator==(const PowerSeries &other) const {
  const int n = std::min(order(), other.order());
  for (int i = 0; i <= n; ++i)
    if (coeffs_[static_cast<size_t>(i)] != other.coeffs_[static_cast<size_t>(i)]) return false;
  return true;
}

}  // namespace cogrowth
