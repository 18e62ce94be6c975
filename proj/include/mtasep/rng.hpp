#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mtasep/poly.hpp"

namespace mtasep {

inline constexpr std::uint64_t kDefaultSeed = 20140612;

/// SplitMix64 evaluated at (seed, counter): stateless apart from the counter,
/// so streams are reproducible and cheap to fork.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform on (0, 1].
  double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Positive rational point with numerators in 1..9 and denominators in 1..7.
inline std::vector<BigRational> random_rate_point(int nvars, std::uint64_t seed,
                                                  std::uint64_t index) {
  CounterRng rng(seed, index);
  std::vector<BigRational> point;
  for (int i = 0; i < nvars; ++i) {
    auto num = static_cast<long>(rng.between(1, 9));
    auto den = static_cast<long>(rng.between(1, 7));
    point.emplace_back(num, den);
  }
  return point;
}

}  // namespace mtasep
