#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace choqpath {

/// Hard cap on the scenario-set size; dense 2^m tables stay small and every
/// exhaustive check stays tractable.
inline constexpr int kMaxScenarios = 16;

/// Absolute tolerance for comparisons between capacity / probability values.
/// Everything modeled lives in [0,1], so 1e-9 is far below any real distinction.
inline constexpr double kValueTolerance = 1e-9;

/// A subset of the scenario universe S = {0, ..., m-1}, stored as a bitmask.
/// Bit i is set iff scenario i belongs to the set.
class ScenarioSet {
 public:
  ScenarioSet(std::uint32_t bits, int m) : bits_(bits), m_(m) {
    if (m < 1 || m > kMaxScenarios) {
      throw std::invalid_argument("ScenarioSet: m must be in [1, " +
                                  std::to_string(kMaxScenarios) + "]");
    }
    if (bits >> m) {
      throw std::invalid_argument("ScenarioSet: bitmask has bits outside the universe");
    }
  }

  static ScenarioSet empty_set(int m) { return {0u, m}; }
  static ScenarioSet full_set(int m) { return {full_mask(m), m}; }
  static ScenarioSet singleton(int scenario, int m) {
    if (scenario < 0 || scenario >= m) {
      throw std::invalid_argument("ScenarioSet: scenario index out of range");
    }
    return {1u << scenario, m};
  }

  static std::uint32_t full_mask(int m) { return (m == 32) ? ~0u : ((1u << m) - 1u); }

  std::uint32_t bits() const { return bits_; }
  int universe_size() const { return m_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int scenario) const { return (bits_ >> scenario) & 1u; }

  ScenarioSet with(int scenario) const { return {bits_ | (1u << check(scenario)), m_}; }
  ScenarioSet without(int scenario) const { return {bits_ & ~(1u << check(scenario)), m_}; }
  ScenarioSet complement() const { return {~bits_ & full_mask(m_), m_}; }

  ScenarioSet set_union(const ScenarioSet& o) const { return {bits_ | same(o).bits_, m_}; }
  ScenarioSet set_intersection(const ScenarioSet& o) const { return {bits_ & same(o).bits_, m_}; }
  bool subset_of(const ScenarioSet& o) const { return (bits_ & ~same(o).bits_) == 0; }

  bool operator==(const ScenarioSet& o) const { return bits_ == o.bits_ && m_ == o.m_; }

 private:
  int check(int scenario) const {
    if (scenario < 0 || scenario >= m_) {
      throw std::invalid_argument("ScenarioSet: scenario index out of range");
    }
    return scenario;
  }
  const ScenarioSet& same(const ScenarioSet& o) const {
    if (o.m_ != m_) throw std::invalid_argument("ScenarioSet: universe size mismatch");
    return o;
  }

  std::uint32_t bits_;
  int m_;
};

}  // namespace choqpath
