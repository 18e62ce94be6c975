#include "mtasep/bully.hpp"

#include <stdexcept>

namespace mtasep {

int BullyLabeling::first_class_cover() const {
  int total = 0;
  for (std::size_t r = 2; r < z.size(); ++r) total += z[r][1];
  return total;
}

BullyLabeling bully_projection(const MultilineQueue& q, const ProcessingOrder& order) {
  const int rows = q.rows();
  const int columns = q.columns();
  const int species = rows + 1;
  BullyLabeling out;
  out.class_of.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(columns), 0));
  out.cover_class = out.class_of;
  out.z.assign(static_cast<std::size_t>(species + 1), std::vector<int>(static_cast<std::size_t>(species + 1), 0));

  for (int c = 0; c < columns; ++c) {
    if (q.occupied(0, c)) out.class_of[0][static_cast<std::size_t>(c)] = 1;
  }
  for (int r = 0; r + 1 < rows; ++r) {
    const auto& above = out.class_of[static_cast<std::size_t>(r)];
    auto& below = out.class_of[static_cast<std::size_t>(r + 1)];
    auto& cover = out.cover_class[static_cast<std::size_t>(r + 1)];
    for (int cls = 1; cls <= r + 1; ++cls) {
      std::vector<int> starts;
      for (int c = 0; c < columns; ++c) {
        if (above[static_cast<std::size_t>(c)] == cls) starts.push_back(c);
      }
      if (order) order(r, cls, starts);
      for (int start : starts) {
        int col = start;
        while (true) {
          auto idx = static_cast<std::size_t>(col);
          if (q.occupied(r + 1, col)) {
            if (below[idx] == 0) {
              below[idx] = cls;
              break;
            }
          } else if (cover[idx] == 0 || cls < cover[idx]) {
            cover[idx] = cls;
          }
          col = q.wrap(col + 1);
        }
      }
    }
    for (int c = 0; c < columns; ++c) {
      auto idx = static_cast<std::size_t>(c);
      if (q.occupied(r + 1, c) && below[idx] == 0) below[idx] = r + 2;
    }
  }

  for (int r = 1; r < rows; ++r) {
    for (int c = 0; c < columns; ++c) {
      const int cls = out.cover_class[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (cls > 0) ++out.z[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(cls)];
    }
  }
  out.word = truncated_projection(out, rows);
  return out;
}

Word truncated_projection(const BullyLabeling& labeling, int rows) {
  if (rows < 1 || rows > static_cast<int>(labeling.class_of.size())) {
    throw std::out_of_range("truncation depth out of range");
  }
  const auto& bottom = labeling.class_of[static_cast<std::size_t>(rows - 1)];
  Word w;
  w.sites.reserve(bottom.size());
  for (int cls : bottom) w.sites.push_back(cls == 0 ? rows + 1 : cls);
  return w;
}

int covered_three_count(const BullyLabeling& labeling) {
  if (labeling.species() != 3) throw std::invalid_argument("covered 3's are defined for three species");
  return labeling.z[2][1];
}

LaurentPoly conjectured_weight(const Composition& c, const BullyLabeling& labeling) {
  const int n = c.species();
  const int nvars = n - 1;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  for (int i = 1; i <= nvars; ++i) {
    int e = i <= n - 2 ? c.vacancies_below(i) : 0;
    for (int lower = 1; lower < i; ++lower) e += labeling.z[static_cast<std::size_t>(i)][static_cast<std::size_t>(lower)];
    for (int r = i + 1; r <= n - 1; ++r) e -= labeling.z[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
    exps[static_cast<std::size_t>(i - 1)] = e;
  }
  return LaurentPoly::monomial(nvars, exps);
}

LaurentPoly conjectured_weight(const MultilineQueue& q) {
  return conjectured_weight(q.composition(), bully_projection(q));
}

LaurentPoly fm3_weight(const Composition& c, const BullyLabeling& labeling) {
  if (c.species() != 3) throw std::invalid_argument("three-species weight needs n = 3");
  const int k = covered_three_count(labeling);
  const int exps[] = {c.count(3) - k, k};
  return LaurentPoly::monomial(2, exps);
}

LaurentPoly fm1_weight(const Composition& c, const BullyLabeling& labeling) {
  const int exps[] = {c.vacancies_below(1) - labeling.first_class_cover()};
  return LaurentPoly::monomial(1, exps);
}

}  // namespace mtasep
