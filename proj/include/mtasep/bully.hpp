#pragma once

#include <functional>
#include <vector>

#include "mtasep/mlq.hpp"
#include "mtasep/poly.hpp"
#include "mtasep/word.hpp"

namespace mtasep {

/// Reorders, in place, the columns of the class-`cls` particles on row `row`
/// (0-based) before they queue into the row below. Any permutation is an
/// admissible order.
using ProcessingOrder = std::function<void(int row, int cls, std::vector<int>& columns)>;

/// Result of the bully-path projection of a multiline queue.
struct BullyLabeling {
  /// class_of[r][c]: class of the particle in cell (r, c), 0 for a vacancy.
  std::vector<std::vector<int>> class_of;
  /// cover_class[r][c]: smallest class whose bully path traverses the vacancy
  /// (r, c); 0 when uncovered or occupied.
  std::vector<std::vector<int>> cover_class;
  /// z[r][i] (1-based, 1 <= i < r <= n): number of i-covered vacancies on row r.
  std::vector<std::vector<int>> z;
  /// Bottom-row classes with vacancies read as class n.
  Word word;

  int species() const { return static_cast<int>(z.size()) - 1; }
  /// z_1 = sum_r z[r][1].
  int first_class_cover() const;

  bool operator==(const BullyLabeling&) const = default;
};

/// Classifies every particle row by row. Within a class, particles queue in
/// left-to-right column order unless `order` says otherwise; the result does
/// not depend on that choice.
BullyLabeling bully_projection(const MultilineQueue& q, const ProcessingOrder& order = {});

/// Projection of the top `rows` rows only, a word of composition
/// (m_1, ..., m_rows, N - M_rows).
Word truncated_projection(const BullyLabeling& labeling, int rows);

/// Number of covered 3's (three species only): vacancies on row 2 lying on
/// a first-class bully path.
int covered_three_count(const BullyLabeling& labeling);

/// The monomial x_1^{V_1} ... x_{n-2}^{V_{n-2}} prod_{i<r} (x_r / x_i)^{z[r][i]}
/// over x_1..x_{n-1}.
LaurentPoly conjectured_weight(const MultilineQueue& q);
LaurentPoly conjectured_weight(const Composition& c, const BullyLabeling& labeling);

/// x_1^{m_3 - k} x_2^k with k the covered-3 count (three species).
LaurentPoly fm3_weight(const Composition& c, const BullyLabeling& labeling);

/// x_1^{V_1 - z_1} in the single variable x_1 (one first-class particle).
LaurentPoly fm1_weight(const Composition& c, const BullyLabeling& labeling);

}  // namespace mtasep
