#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtasep {

/// Raised when user-supplied data (a composition, a queue grid, a word)
/// violates its structural invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Species-count vector m = (m_1, ..., m_n) together with the derived
/// row quantities of the multiline-queue lift.
///
/// All accessors take 1-based indices so that code reads like the
/// combinatorics: `prefix(r)` is M_r, `vacancies(r)` is v_r = N - M_r and
/// `vacancies_below(r)` is V_r = v_{r+1} + ... + v_{n-1}.
class Composition {
 public:
  /// Validates and builds. Requires at least two species and every count
  /// positive; the error message names the first offending (1-based) index.
  static Composition make(std::span<const int> counts);
  static Composition make(std::initializer_list<int> counts) {
    return make(std::span<const int>(counts.begin(), counts.size()));
  }
  /// Parses "1,1,2" (commas or spaces).
  static Composition parse(const std::string& text);

  int species() const { return static_cast<int>(counts_.size()); }
  int size() const { return size_; }
  int count(int j) const { return counts_.at(j - 1); }
  int prefix(int r) const { return prefix_.at(r - 1); }
  int vacancies(int r) const { return size_ - prefix(r); }
  int vacancies_below(int r) const;
  /// Number of multiline-queue rows, n - 1.
  int rows() const { return species() - 1; }

  const std::vector<int>& counts() const { return counts_; }
  std::string to_string() const;

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> counts_;
  std::vector<int> prefix_;
  int size_ = 0;
};

/// All compositions of `total` into exactly `parts` positive parts, in
/// lexicographic order.
std::vector<Composition> compositions_of(int total, int parts);

/// Every composition with 2 <= N <= max_size and n >= 2 parts, ordered by
/// N, then n, then lexicographically.
std::vector<Composition> compositions_up_to(int max_size);

}  // namespace mtasep
