#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mtasep/composition.hpp"

namespace mtasep {

/// An (n-1) x N occupancy grid on a cylinder. Row 0 is the top row (row 1 in
/// printed output); bit c of `row(r)` is set when column c is occupied.
class MultilineQueue {
 public:
  MultilineQueue() = default;
  MultilineQueue(int columns, std::vector<std::uint64_t> rows);

  /// Reads the text format: one line per row, top row first, '1' occupied
  /// and '0' vacant. Rejects ragged grids and row sums that do not come from
  /// a composition (they must strictly increase and stay below N).
  static MultilineQueue parse(const std::string& text);

  int columns() const { return columns_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  std::uint64_t row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  bool occupied(int r, int col) const { return (row(r) >> wrap(col)) & 1U; }
  int occupancy(int r) const;
  int wrap(int col) const { return ((col % columns_) + columns_) % columns_; }

  /// The composition whose row sums this grid realizes.
  Composition composition() const;

  /// n-1 lines of '0'/'1', newline-terminated.
  std::string to_text() const;
  /// Rows joined with '/', e.g. "001/011".
  std::string label() const;

  void set(int r, int col, bool value);

  bool operator==(const MultilineQueue&) const = default;
  /// Canonical order: row by row from the top, each row compared as the
  /// binary string read left to right.
  bool operator<(const MultilineQueue& other) const;

 private:
  int columns_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct MultilineQueueHash {
  std::size_t operator()(const MultilineQueue& q) const noexcept;
};

/// All queues of composition c in canonical order. The count is
/// prod_{r=1}^{n-1} binom(N, M_r).
std::vector<MultilineQueue> enumerate_mlqs(const Composition& c);

/// Column trajectory of the ringing path started under column `start` of the
/// bottom row. `cols[r]` is the column on row r (0 = top).
struct RingingPath {
  int start = 0;
  std::vector<int> cols;
};

RingingPath ringing_path(const MultilineQueue& q, int start);

/// Applies the swap rule on every row of the ringing path simultaneously.
MultilineQueue ringing_transition(const MultilineQueue& q, int start);

/// Every (predecessor, start column) with ringing_transition(pred, start) == q
/// and pred != q.
std::vector<std::pair<MultilineQueue, int>> inverse_ringing_transitions(
    const MultilineQueue& q);

}  // namespace mtasep
