#pragma once

#include <span>
#include <vector>

#include "choqpath/scenario_set.hpp"

namespace choqpath {

/// A point in the probability simplex over the m scenarios.
/// Components must be nonnegative and sum to 1 within kValueTolerance.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  std::span<const double> values() const { return p_; }

  bool operator==(const ProbabilityVector& o) const { return p_ == o.p_; }

 private:
  std::vector<double> p_;
};

/// A normalized monotone set function v : 2^S -> [0,1] over m scenarios,
/// stored as a dense table indexed by subset bitmask.
///
/// Construction enforces v(empty) = 0, v(S) = 1 and monotonicity
/// (A subset of B implies v(A) <= v(B)), all within kValueTolerance.
/// Instances are immutable and safe to share across threads.
class Capacity {
 public:
  Capacity(int m, std::vector<double> values);

  int m() const { return m_; }
  std::uint32_t full_mask() const { return ScenarioSet::full_mask(m_); }

  /// Unchecked table lookup by bitmask; hot path for the solvers.
  double value_at(std::uint32_t mask) const { return values_[mask]; }

  double operator[](const ScenarioSet& a) const;

  std::span<const double> table() const { return values_; }

  bool operator==(const Capacity& o) const { return m_ == o.m_ && values_ == o.values_; }

 private:
  int m_;
  std::vector<double> values_;
};

/// Nonnegative Mobius masses over subsets, summing to 1, with zero mass on
/// the empty set. This is the representation behind plausibility capacities.
class MobiusCapacity {
 public:
  MobiusCapacity(int m, std::vector<double> masses);

  int m() const { return m_; }
  double mass_at(std::uint32_t mask) const { return masses_[mask]; }
  std::span<const double> masses() const { return masses_; }

 private:
  int m_;
  std::vector<double> masses_;
};

/// Dual capacity: dual(v)(A) = 1 - v(S \ A).
Capacity dual(const Capacity& v);

/// Submodularity: v(A u B) + v(A n B) <= v(A) + v(B) for every pair, checked
/// exhaustively over all subset pairs.
bool is_concave(const Capacity& v);

/// Supermodularity, the reversed inequality.
bool is_convex(const Capacity& v);

/// The concave distortion capacity v1(A) = 1 - (sum_{i not in A} p_i)^2.
Capacity capacity_v1(const ProbabilityVector& p);

/// Plausibility capacity from Mobius masses: v2(A) = sum of masses of all
/// subsets intersecting A. Always concave.
Capacity capacity_from_mobius(const MobiusCapacity& mu);

/// True iff dual(v)(A) - tol <= P(A) <= v(A) + tol for every subset A, where
/// P(A) = sum of p_i over i in A. Requires a concave v (the core of the dual
/// may be empty otherwise) and throws std::invalid_argument if not.
bool core_contains(const Capacity& v, const ProbabilityVector& p,
                   double tol = kValueTolerance);

/// Shapley values of the dual capacity: the average marginal contribution of
/// each scenario. For concave v this is a member of core(dual(v)).
/// Throws std::invalid_argument for non-concave v.
ProbabilityVector shapley(const Capacity& v);

/// The maximum-entropy element of core(dual(v)), computed with Jaffray's
/// greedy procedure. Ties in the greedy argmin are resolved by taking the
/// union of all minimizing subsets, which is deterministic and, for concave v,
/// itself a minimizer. Throws std::invalid_argument for non-concave v.
ProbabilityVector max_entropy(const Capacity& v);

/// Shannon entropy -sum p_i ln p_i with the convention 0 ln 0 = 0.
double entropy(const ProbabilityVector& p);

}  // namespace choqpath
