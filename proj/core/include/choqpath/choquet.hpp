#pragma once

#include "choqpath/capacity.hpp"

namespace choqpath {

/// Per-scenario accumulated cost of a path; componentwise nonnegative and
/// additive along arcs.
using CostVector = std::vector<double>;

/// Increasing disutility on costs with w(0) = 0.
///
/// The power family w(t) = (t / scale)^exponent is convex for exponent >= 1
/// and satisfies w(scale) = 1. The identity kind w(t) = t has no scale bound.
class DisutilityFn {
 public:
  enum class Kind { kPower, kIdentity };

  static DisutilityFn power(double exponent, double scale);
  static DisutilityFn identity();

  /// Evaluates w(t). Defined for every t >= 0, including values beyond the
  /// scale bound; bound enforcement belongs to ced().
  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double scale() const { return scale_; }
  bool has_bound() const { return kind_ == Kind::kPower; }

 private:
  DisutilityFn(Kind kind, double exponent, double scale)
      : kind_(kind), exponent_(exponent), scale_(scale) {}

  Kind kind_;
  double exponent_;
  double scale_;
};

/// Choquet integral of a nonnegative vector z with respect to capacity v:
/// the marginal increments of the sorted values, each weighted by the
/// capacity of the upper-level set. Consecutive positions whose upper-level
/// sets carry the same capacity value are accumulated as one increment, which
/// keeps constant vectors and the min-max special case exact in floats.
double choquet_integral(const Capacity& v, std::span<const double> z);

/// Choquet expected disutility: choquet_integral(v, (w(x_1), ..., w(x_m))).
/// For a power disutility every component of x must stay within the scale
/// bound; a violating component throws std::domain_error.
double ced(const Capacity& v, const DisutilityFn& w, std::span<const double> x);

/// Linear scalarization sum_i p_i x_i.
double scalarize(const ProbabilityVector& p, std::span<const double> x);

struct LinearLowerBound {
  double strong;  ///< sum_i p_i w(x_i)
  double weak;    ///< w(sum_i p_i x_i)
};

/// Lower bounds on ced(v, w, x) valid whenever p lies in core(dual(v)) and w
/// is convex: ced >= strong >= weak. Membership of p is the caller's business
/// (solvers check it once at setup).
LinearLowerBound linear_lower_bound(const ProbabilityVector& p, const DisutilityFn& w,
                                    std::span<const double> x);

}  // namespace choqpath
