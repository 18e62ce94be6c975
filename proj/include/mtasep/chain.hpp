#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mtasep/bully.hpp"
#include "mtasep/composition.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/poly.hpp"
#include "mtasep/word.hpp"

namespace mtasep {

enum class Mechanism { TasepSwap, Ringing, CoupeRegular, CoupePulling, Lumped };

std::string to_string(Mechanism m);
Mechanism parse_mechanism(const std::string& text);

/// One off-diagonal generator entry. `site` is the column of the particle or
/// clock that fired (0-based), -1 for lumped edges.
struct Transition {
  std::size_t from = 0;
  std::size_t to = 0;
  LaurentPoly rate;
  Mechanism mechanism = Mechanism::TasepSwap;
  int site = -1;
};

/// Block id per state; ids run over 0..blocks-1.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t blocks = 0;
};

/// Minimal non-owning view of a generator: what the solvers need.
struct GraphView {
  std::size_t states = 0;
  std::span<const Transition> transitions;
  int nvars = 0;
};

/// A finite continuous-time chain with symbolic rates. Loops are never
/// stored; diagonal entries are implied.
template <class State>
struct ChainGraph {
  Composition composition;
  int nvars = 0;
  std::vector<State> states;
  std::vector<Transition> transitions;
  std::optional<Partition> partition;

  std::size_t size() const { return states.size(); }
  GraphView view() const { return {states.size(), transitions, nvars}; }
};

using TasepChain = ChainGraph<Word>;
using QueueChain = ChainGraph<MultilineQueue>;
/// States of a lumped chain are block ids.
using BlockChain = ChainGraph<std::size_t>;

inline std::string state_label(const Word& w) { return w.label(); }
inline std::string state_label(const MultilineQueue& q) { return q.label(); }
inline std::string state_label(std::size_t block) { return std::to_string(block); }

/// Inhomogeneous TASEP on the ring: a b -> b a at sites (i-1, i) with rate
/// x_b whenever a > b. Variables x_1..x_{n-1}.
TasepChain build_tasep_chain(const Composition& c);

enum class RingingRule {
  Uniform,        ///< every clock rate 1
  ThreeSpecies,   ///< x_1 at a 1 or covered 3, x_2 at a 2 or non-covered 3
  OneFirstClass,  ///< x_1 at the single 1, rate 1 elsewhere
};

/// Ringing-path process on multiline queues. Each (queue, clock column)
/// whose transition changes the queue contributes one record; the bully
/// partition is attached.
QueueChain build_fm_chain(const Composition& c, RingingRule rule);

/// Bully-projection partition of a queue chain; block ids are the positions
/// of the projected words in enumerate_words(c).
Partition bully_partition(const QueueChain& g);

/// Sum of rates per ordered state pair.
std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> aggregate_rates(GraphView g);

/// Dense generator in the paper's convention: entry (a, b) is rate(b -> a),
/// diagonal entries are minus the total outgoing rate.
std::vector<std::vector<LaurentPoly>> transition_matrix(GraphView g);

enum class Process { Tasep, Fm, Fm3, Fm1, Coupe };
Process parse_process(const std::string& text);
std::string to_string(Process p);

using AnyChain = std::variant<TasepChain, QueueChain>;
/// Builds the named process, rejecting incompatible compositions.
AnyChain build_chain(Process p, const Composition& c);

std::string to_dot(const TasepChain& g);
std::string to_dot(const QueueChain& g);
std::string to_json(const TasepChain& g);
std::string to_json(const QueueChain& g);
/// Reads back either JSON export.
AnyChain chain_from_json(const std::string& text);

/// Variable names used when rendering rates of a chain.
std::vector<std::string> rate_names(int nvars);

}  // namespace mtasep
