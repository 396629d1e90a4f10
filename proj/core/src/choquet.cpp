#include "choqpath/choquet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace choqpath {

DisutilityFn DisutilityFn::power(double exponent, double scale) {
  if (!(exponent >= 1.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("DisutilityFn: exponent must be >= 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("DisutilityFn: scale must be positive");
  }
  return {Kind::kPower, exponent, scale};
}

DisutilityFn DisutilityFn::identity() { return {Kind::kIdentity, 1.0, 0.0}; }

double DisutilityFn::operator()(double t) const {
  if (kind_ == Kind::kIdentity) return t;
  const double r = t / scale_;
  if (exponent_ == 1.0) return r;
  if (exponent_ == 2.0) return r * r;
  if (exponent_ == 3.0) return r * r * r;
  return std::pow(r, exponent_);
}

double choquet_integral(const Capacity& v, std::span<const double> z) {
  const int m = v.m();
  if (static_cast<int>(z.size()) != m) {
    throw std::invalid_argument("choquet_integral: vector size must equal m");
  }
  std::array<int, kMaxScenarios> order;
  std::iota(order.begin(), order.begin() + m, 0);
  std::sort(order.begin(), order.begin() + m, [&](int a, int b) {
    return z[a] < z[b] || (z[a] == z[b] && a < b);
  });

  double total = 0.0;
  double prev = 0.0;
  std::uint32_t upper = v.full_mask();
  int i = 0;
  while (i < m) {
    const double level = v.value_at(upper);
    double end = prev;
    do {
      end = z[order[i]];
      upper &= ~(1u << order[i]);
      ++i;
    } while (i < m && v.value_at(upper) == level);
    total += (end - prev) * level;
    prev = end;
  }
  return total;
}

double ced(const Capacity& v, const DisutilityFn& w, std::span<const double> x) {
  const int m = v.m();
  if (static_cast<int>(x.size()) != m) {
    throw std::invalid_argument("ced: vector size must equal m");
  }
  std::array<double, kMaxScenarios> wx;
  for (int i = 0; i < m; ++i) {
    if (w.has_bound() && x[i] > w.scale()) {
      throw std::domain_error("ced: cost component " + std::to_string(i) +
                              " exceeds the disutility scale bound");
    }
    wx[i] = w(x[i]);
  }
  return choquet_integral(v, std::span<const double>(wx.data(), m));
}

double scalarize(const ProbabilityVector& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.size()) {
    throw std::invalid_argument("scalarize: dimension mismatch");
  }
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) s += p[i] * x[i];
  return s;
}

LinearLowerBound linear_lower_bound(const ProbabilityVector& p, const DisutilityFn& w,
                                    std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.size()) {
    throw std::invalid_argument("linear_lower_bound: dimension mismatch");
  }
  double strong = 0.0;
  double mean = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    strong += p[i] * w(x[i]);
    mean += p[i] * x[i];
  }
  return {strong, w(mean)};
}

}  // namespace choqpath
