#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtasep/composition.hpp"
#include "mtasep/rng.hpp"

namespace mtasep {

struct VerifyOptions {
  int max_size = 5;  ///< largest N visited by the suite drivers
  std::uint64_t seed = kDefaultSeed;
  int points = 5;    ///< random rational rate points per numeric cross-check
  /// Numeric cross-checks by exact solve are skipped above this many states.
  std::size_t solve_limit = 1000;
  /// Largest N at which block sums and aggregated weights are also checked
  /// symbolically on the TASEP chain; above it only rate points are used.
  int symbolic_size = 5;
};

/// One verification outcome. Theorem suites report pass/fail; conjecture
/// suites report agree/disagree.
struct Report {
  std::string suite;
  std::string subject;
  bool theorem = true;
  bool ok = true;
  double elapsed = 0.0;
  std::optional<std::string> counterexample;
  nlohmann::json details = nlohmann::json::object();

  std::string status() const;
  nlohmann::json to_json() const;
};

/// Three-species ringing chain: fm3 weights stationary, lumpable under the
/// bully projection, lumped chain equal to the TASEP chain, block sums
/// stationary for the TASEP chain, and the general conjectured weight equal
/// to the fm3 weight on every queue.
Report check_fm3_theorem(const Composition& c, const VerifyOptions& o = {});

/// One first-class particle: weights x_1^{V_1 - z_1} stationary, with an
/// exact-solve cross-check at x_1 in {2, 3, 5/2}.
Report check_fm1_theorem(const Composition& c, const VerifyOptions& o = {});

/// Sum over queues of a^{V_1 - z_1} against the explicit product of sums;
/// the product of complete homogeneous polynomials is compared as a detail.
Report check_partition_function(const Composition& c, const VerifyOptions& o = {});

/// Aggregated conjectured weights against the TASEP chain (conjecture).
Report check_main_conjecture(const Composition& c, const VerifyOptions& o = {});

/// Normalization w(n ... 1) = prod x_i^{binom(n-i, 2)} and positivity of the
/// normalized weights for m = (1, ..., 1) (conjecture).
Report check_lw_normalization_and_positivity(int n, const VerifyOptions& o = {});

/// Queues projecting to 1 2 ... n against prod binom(n-1, i) (conjecture).
Report check_identity_count(int n, const VerifyOptions& o = {});

/// Rate-1 ringing chain: strongly connected, balanced, uniform solution.
Report check_uniform_stationarity(const Composition& c, const VerifyOptions& o = {});

/// Coupe chain: fm3 weights stationary, lumps to TASEP, irreducible,
/// minimal, seat counts of outgoing and incoming jumps.
Report check_coupe_theorem(const Composition& c, const VerifyOptions& o = {});

/// The four block properties of three-species queues, checked on every queue.
Report check_three_species_lemma(const Composition& c, const VerifyOptions& o = {});


/// Names accepted by run_suite: fm3 fm1 zpart main lw identity uniform coupe
/// lemma, plus "all".
const std::vector<std::string>& suite_names();

/// Runs a suite over every applicable composition with N <= max_size,
/// calling `sink` as each report is produced.
void run_suite(const std::string& name, const VerifyOptions& o,
               const std::function<void(const Report&)>& sink);

}  // namespace mtasep
