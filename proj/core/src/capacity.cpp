#include "choqpath/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace choqpath {

namespace {

std::size_t table_size(int m) { return std::size_t{1} << m; }

void check_m(int m, const char* who) {
  if (m < 1 || m > kMaxScenarios) {
    throw std::invalid_argument(std::string(who) + ": m must be in [1, " +
                                std::to_string(kMaxScenarios) + "]");
  }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  check_m(static_cast<int>(p_.size()), "ProbabilityVector");
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0) || !std::isfinite(p_[i])) {
      throw std::invalid_argument("ProbabilityVector: p[" + std::to_string(i) +
                                  "] must be finite and nonnegative");
    }
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > kValueTolerance) {
    throw std::invalid_argument("ProbabilityVector: components must sum to 1");
  }
}

Capacity::Capacity(int m, std::vector<double> values) : m_(m), values_(std::move(values)) {
  check_m(m, "Capacity");
  if (values_.size() != table_size(m)) {
    throw std::invalid_argument("Capacity: table must have 2^m entries");
  }
  for (std::size_t mask = 0; mask < values_.size(); ++mask) {
    if (!std::isfinite(values_[mask])) {
      throw std::invalid_argument("Capacity: values[" + std::to_string(mask) +
                                  "] must be finite");
    }
  }
  if (std::abs(values_.front()) > kValueTolerance) {
    throw std::invalid_argument("Capacity: value of the empty set must be 0");
  }
  if (std::abs(values_.back() - 1.0) > kValueTolerance) {
    throw std::invalid_argument("Capacity: value of the full set must be 1");
  }
  // Monotonicity: adding one element never decreases the value. Pairwise
  // single-element steps cover all subset chains.
  const std::uint32_t full = full_mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    for (int i = 0; i < m_; ++i) {
      const std::uint32_t bit = 1u << i;
      if (mask & bit) continue;
      if (values_[mask] > values_[mask | bit] + kValueTolerance) {
        throw std::invalid_argument("Capacity: not monotone at subset " + std::to_string(mask) +
                                    " with scenario " + std::to_string(i));
      }
    }
  }
}

double Capacity::operator[](const ScenarioSet& a) const {
  if (a.universe_size() != m_) {
    throw std::invalid_argument("Capacity: scenario set universe mismatch");
  }
  return values_[a.bits()];
}

MobiusCapacity::MobiusCapacity(int m, std::vector<double> masses)
    : m_(m), masses_(std::move(masses)) {
  check_m(m, "MobiusCapacity");
  if (masses_.size() != table_size(m)) {
    throw std::invalid_argument("MobiusCapacity: masses must have 2^m entries");
  }
  if (std::abs(masses_.front()) > kValueTolerance) {
    throw std::invalid_argument("MobiusCapacity: mass of the empty set must be 0");
  }
  double sum = 0.0;
  for (std::size_t mask = 0; mask < masses_.size(); ++mask) {
    if (!(masses_[mask] >= 0.0) || !std::isfinite(masses_[mask])) {
      throw std::invalid_argument("MobiusCapacity: masses[" + std::to_string(mask) +
                                  "] must be finite and nonnegative");
    }
    sum += masses_[mask];
  }
  if (std::abs(sum - 1.0) > kValueTolerance) {
    throw std::invalid_argument("MobiusCapacity: masses must sum to 1");
  }
}

Capacity dual(const Capacity& v) {
  const std::uint32_t full = v.full_mask();
  std::vector<double> out(table_size(v.m()));
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    out[mask] = 1.0 - v.value_at(full & ~mask);
  }
  return {v.m(), std::move(out)};
}

bool is_concave(const Capacity& v) {
  const std::uint32_t full = v.full_mask();
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = a; b <= full; ++b) {
      if (v.value_at(a | b) + v.value_at(a & b) >
          v.value_at(a) + v.value_at(b) + kValueTolerance) {
        return false;
      }
    }
  }
  return true;
}

bool is_convex(const Capacity& v) {
  const std::uint32_t full = v.full_mask();
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = a; b <= full; ++b) {
      if (v.value_at(a | b) + v.value_at(a & b) <
          v.value_at(a) + v.value_at(b) - kValueTolerance) {
        return false;
      }
    }
  }
  return true;
}

Capacity capacity_v1(const ProbabilityVector& p) {
  const int m = p.size();
  const std::uint32_t full = ScenarioSet::full_mask(m);
  std::vector<double> out(table_size(m));
  out[0] = 0.0;
  out[full] = 1.0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    double missing = 0.0;
    for (int i = 0; i < m; ++i) {
      if (!((mask >> i) & 1u)) missing += p[i];
    }
    out[mask] = std::clamp(1.0 - missing * missing, 0.0, 1.0);
  }
  return {m, std::move(out)};
}

Capacity capacity_from_mobius(const MobiusCapacity& mu) {
  const int m = mu.m();
  const std::uint32_t full = ScenarioSet::full_mask(m);
  // Subset sums via the zeta transform: sub[mask] = sum of masses over all
  // subsets of mask. A set intersects A exactly when it is not contained in
  // the complement of A.
  std::vector<double> sub(mu.masses().begin(), mu.masses().end());
  for (int i = 0; i < m; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (mask & bit) sub[mask] += sub[mask ^ bit];
    }
  }
  const double total = sub[full];
  std::vector<double> out(table_size(m));
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    out[mask] = total - sub[full & ~mask];
  }
  out[0] = 0.0;
  return {m, std::move(out)};
}

bool core_contains(const Capacity& v, const ProbabilityVector& p, double tol) {
  if (p.size() != v.m()) {
    throw std::invalid_argument("core_contains: dimension mismatch");
  }
  if (!is_concave(v)) {
    throw std::invalid_argument("core_contains: capacity must be concave");
  }
  const std::uint32_t full = v.full_mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    double prob = 0.0;
    for (int i = 0; i < v.m(); ++i) {
      if ((mask >> i) & 1u) prob += p[i];
    }
    const double lower = 1.0 - v.value_at(full & ~mask);
    if (prob < lower - tol || prob > v.value_at(mask) + tol) return false;
  }
  return true;
}

namespace {

// Clamp stray negatives from float noise and renormalize to an exact-enough
// simplex point before handing the result to ProbabilityVector validation.
ProbabilityVector to_probability(std::vector<double> p) {
  double sum = 0.0;
  for (double& x : p) {
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (sum <= 0.0) throw std::logic_error("probability construction: zero mass");
  for (double& x : p) x /= sum;
  return ProbabilityVector(std::move(p));
}

}  // namespace

ProbabilityVector shapley(const Capacity& v) {
  if (!is_concave(v)) {
    throw std::invalid_argument("shapley: capacity must be concave");
  }
  const int m = v.m();
  const Capacity bar = dual(v);
  std::array<double, kMaxScenarios + 1> factorial{};
  factorial[0] = 1.0;
  for (int k = 1; k <= m; ++k) factorial[k] = factorial[k - 1] * k;
  std::array<double, kMaxScenarios> weight{};  // by |K|
  for (int k = 0; k < m; ++k) {
    weight[k] = factorial[m - k - 1] * factorial[k] / factorial[m];
  }

  const std::uint32_t full = v.full_mask();
  std::vector<double> phi(m, 0.0);
  for (int i = 0; i < m; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t k = 0; k <= full; ++k) {
      if (k & bit) continue;
      phi[i] += weight[std::popcount(k)] * (bar.value_at(k | bit) - bar.value_at(k));
    }
  }
  return to_probability(std::move(phi));
}

ProbabilityVector max_entropy(const Capacity& v) {
  if (!is_concave(v)) {
    throw std::invalid_argument("max_entropy: capacity must be concave");
  }
  const int m = v.m();
  const std::uint32_t full = v.full_mask();
  constexpr double kTieEps = 1e-12;

  std::vector<double> p(m, 0.0);
  std::uint32_t covered = 0;
  while (covered != full) {
    const std::uint32_t rest = full & ~covered;
    const double base = v.value_at(covered);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t e = rest; e; e = (e - 1) & rest) {
      best = std::min(best, (v.value_at(covered | e) - base) / std::popcount(e));
    }
    std::uint32_t chosen = 0;
    for (std::uint32_t e = rest; e; e = (e - 1) & rest) {
      const double ratio = (v.value_at(covered | e) - base) / std::popcount(e);
      if (ratio <= best + kTieEps) chosen |= e;
    }
    const double share =
        (v.value_at(covered | chosen) - base) / std::popcount(chosen);
    for (int i = 0; i < m; ++i) {
      if ((chosen >> i) & 1u) p[i] = share;
    }
    covered |= chosen;
  }
  return to_probability(std::move(p));
}

double entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log(p[i]);
  }
  return h;
}

}  // namespace choqpath
