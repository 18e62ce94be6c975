#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtasep/chain.hpp"
#include "mtasep/poly.hpp"

namespace mtasep {

/// The sampler reached a state with no outgoing transitions.
class AbsorbingStateError : public std::runtime_error {
 public:
  explicit AbsorbingStateError(std::size_t state)
      : std::runtime_error("absorbing state " + std::to_string(state)), state_(state) {}
  std::size_t state() const { return state_; }

 private:
  std::size_t state_;
};

struct SimConfig {
  std::vector<BigRational> rates;  ///< one positive value per chain variable
  std::uint64_t seed = 1;
  std::uint64_t events = 1000000;
  double burn_in = 0.1;  ///< fraction of events discarded before measuring
  std::size_t start = 0;
};

/// Holding-time occupation fractions measured after burn-in.
struct EmpiricalDistribution {
  std::vector<double> fractions;
  double total_time = 0.0;
  std::uint64_t events = 0;  ///< events counted after burn-in
  /// Occupation fractions re-accumulated through a partition during the run,
  /// when one was supplied.
  std::vector<double> projected;
};

/// Gillespie sampler over any chain. Rates are evaluated exactly and then
/// converted to binary64 for the clocks.
EmpiricalDistribution gillespie_run(GraphView g, const SimConfig& cfg,
                                    const Partition* project = nullptr);

struct Comparison {
  double tv = 0.0;
  std::vector<double> exact;  ///< normalized target
  std::vector<double> z;      ///< per-state z-scores
  bool passed = false;
};

/// Total-variation distance and z-scores against an exact (unnormalized)
/// vector; passes when tv <= tolerance.
Comparison compare_to_exact(std::span<const double> fractions, std::span<const BigRational> exact,
                            double tolerance, std::uint64_t events);

/// CSV with header "state,fraction,exact,z"; `exact`/`z` columns are left
/// empty when no comparison is given.
std::string simulation_csv(const std::vector<std::string>& labels, std::span<const double> fractions,
                           const Comparison* comparison);

}  // namespace mtasep
