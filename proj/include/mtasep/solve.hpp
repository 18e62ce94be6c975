#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtasep/chain.hpp"
#include "mtasep/poly.hpp"

namespace mtasep {

/// Raised when a stationary solve finds a nullspace of dimension other than one.
class ReducibleChainError : public std::runtime_error {
 public:
  explicit ReducibleChainError(std::size_t nullity);
  std::size_t nullity() const { return nullity_; }

 private:
  std::size_t nullity_;
};

/// Incoming minus outgoing weighted rate at every state. Weights may be
/// Laurent; the residual is cleared of negative powers by a single common
/// monomial, so a zero residual means exact stationarity.
std::vector<LaurentPoly> master_residual(GraphView g, std::span<const LaurentPoly> weights);

/// First state with a nonzero residual, if any.
std::optional<std::size_t> first_nonzero(const std::vector<LaurentPoly>& residual);

enum class SolveMethod { Automatic, Bareiss, Modular };

struct SolveOptions {
  SolveMethod method = SolveMethod::Automatic;
  /// Automatic uses Bareiss up to this many states and the modular route above.
  std::size_t bareiss_limit = 120;
};

/// Exact stationary vector at a rate point, scaled to coprime positive
/// integers (returned as rationals with denominator one).
std::vector<BigRational> stationary_solve(GraphView g, std::span<const BigRational> point,
                                          const SolveOptions& options = {});

/// Rescales a vector with nonzero entries of one sign to coprime positive integers.
std::vector<BigRational> normalize_integral(std::vector<BigRational> v);

/// Exact proportionality of two vectors (all entries nonzero).
bool proportional(std::span<const BigRational> a, std::span<const BigRational> b);

/// Evaluates symbolic weights at a point.
std::vector<BigRational> evaluate_all(std::span<const LaurentPoly> weights,
                                      std::span<const BigRational> point);

struct LumpabilityCounterexample {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t target_block = 0;
  LaurentPoly first_rate;
  LaurentPoly second_rate;
};

struct LumpabilityReport {
  bool lumpable = true;
  std::optional<LumpabilityCounterexample> counterexample;
  explicit operator bool() const { return lumpable; }
};

/// Every pair of states in one block has the same total rate into every
/// other block.
LumpabilityReport check_lumpability(GraphView g, const Partition& p);

/// Block chain with the common block-to-block rates; throws
/// std::invalid_argument when the partition is not lumpable.
BlockChain lump(GraphView g, const Partition& p);

/// Strong connectivity of the transition graph.
bool irreducible(GraphView g);

/// Sum of entries per block.
std::vector<BigRational> block_sums(std::span<const BigRational> v, const Partition& p);
std::vector<LaurentPoly> block_sums(std::span<const LaurentPoly> v, const Partition& p);

/// Partition with one block per state.
Partition singleton_partition(std::size_t states);

/// Same states, same transitions with rates, as multisets of
/// (from, to, rate) after aggregation; `relabel` maps states of `a` to `b`.
bool same_graph(GraphView a, GraphView b, std::span<const std::size_t> relabel);

}  // namespace mtasep
