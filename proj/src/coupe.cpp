#include "mtasep/coupe.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtasep {

std::vector<int> Coupe::sites(int ring) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) out.push_back((start + k) % ring);
  return out;
}

std::vector<Coupe> decompose_coupes(const Word& w) {
  const int ring = w.size();
  bool has_low = false;
  for (int s : w.sites) {
    if (s < 1 || s > 3) throw ValidationError("coupes are defined for three-species words");
    has_low = has_low || s != 3;
  }
  if (!has_low) throw ValidationError("a word of only 3's has no coupes");

  std::vector<int> cuts;  // a coupe ends at each cut site
  for (int i = 0; i < ring; ++i) {
    const int a = w.at(i);
    const int b = w.at(i + 1);
    if ((a == 2 && b != 2) || (a == 1 && b != 1)) cuts.push_back(i);
  }
  if (cuts.empty()) {
    // Only one low class and no 3's: a single run fills the ring.
    throw ValidationError("word needs both a 1 and a 2 to be cut into coupes");
  }
  std::vector<Coupe> out;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const int previous = cuts[(k + cuts.size() - 1) % cuts.size()];
    Coupe cp;
    cp.start = (previous + 1) % ring;
    cp.back = cuts[k];
    cp.length = ((cp.back - cp.start) % ring + ring) % ring + 1;
    cp.front = cp.start;
    while (w.at(cp.front) == 3) cp.front = (cp.front + 1) % ring;
    cp.cls = w.at(cp.front);
    cp.full = cp.front == cp.start;
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end(), [](const Coupe& a, const Coupe& b) { return a.start < b.start; });
  return out;
}

CoupeCounts coupe_counts(const MultilineQueue& q, const std::vector<Coupe>& coupes) {
  CoupeCounts n;
  for (const auto& cp : coupes) {
    const bool occupied_back = q.occupied(0, cp.back);
    if (cp.cls == 1) {
      ++n.first_class;
      if (cp.full) ++n.full_first;
      if (occupied_back) {
        ++n.occupied_back_first;
      } else {
        ++n.vacant_back_first;
      }
    } else {
      ++n.second_class;
      if (cp.full) ++n.full_second;
      if (!occupied_back) ++n.vacant_back_second;
    }
  }
  return n;
}

namespace {

void move_left(MultilineQueue& q, int row, int col) {
  if (!q.occupied(row, col) || q.occupied(row, col - 1)) {
    throw std::logic_error("coupe jump would stack two particles in one cell");
  }
  q.set(row, col, false);
  q.set(row, col - 1, true);
}

// Shifts every top-row particle at the given columns (left to right) one step
// to the left.
void pull_top_row(MultilineQueue& q, const std::vector<int>& cols) {
  for (int c : cols) {
    if (q.occupied(0, c)) move_left(q, 0, c);
  }
}

}  // namespace

std::optional<CoupeJump> coupe_jump(const MultilineQueue& q, const std::vector<Coupe>& coupes,
                                    std::size_t index) {
  const Coupe& cp = coupes.at(index);
  if (cp.cls == 2 && cp.full) return std::nullopt;
  const int ring = q.columns();
  const int front = cp.front;
  const int left = q.wrap(front - 1);
  CoupeJump jump{q, Mechanism::CoupeRegular, front, cp.cls};
  MultilineQueue& next = jump.target;

  if (cp.cls == 1 && q.occupied(0, front)) {
    for (int r = 0; r < 2; ++r) {
      if (next.occupied(r, front) && !next.occupied(r, left)) move_left(next, r, front);
    }
  } else {
    jump.mechanism = Mechanism::CoupePulling;
    if (!next.occupied(1, left)) move_left(next, 1, front);
    if (front != cp.back) {
      std::vector<int> cols;
      for (int c = q.wrap(front + 1);; c = q.wrap(c + 1)) {
        cols.push_back(c);
        if (c == cp.back) break;
      }
      pull_top_row(next, cols);
    } else {
      const Coupe& right = coupes[(index + 1) % coupes.size()];
      pull_top_row(next, right.sites(ring));
    }
  }
  if (next == q) throw std::logic_error("coupe jump left the queue unchanged");
  return jump;
}

QueueChain build_coupe_chain(const Composition& c) {
  if (c.species() != 3) {
    throw ValidationError("the coupe process needs n = 3, got n = " + std::to_string(c.species()));
  }
  QueueChain g;
  g.composition = c;
  g.nvars = 2;
  g.states = enumerate_mlqs(c);
  std::unordered_map<MultilineQueue, std::size_t, MultilineQueueHash> index;
  for (std::size_t s = 0; s < g.states.size(); ++s) index.emplace(g.states[s], s);
  const LaurentPoly x1 = LaurentPoly::variable(2, 1);
  const LaurentPoly x2 = LaurentPoly::variable(2, 2);

  for (std::size_t s = 0; s < g.states.size(); ++s) {
    const auto& q = g.states[s];
    const auto coupes = decompose_coupes(bully_projection(q).word);
    for (std::size_t k = 0; k < coupes.size(); ++k) {
      auto jump = coupe_jump(q, coupes, k);
      if (!jump) continue;
      g.transitions.push_back({s, index.at(jump->target), jump->jumper_class == 1 ? x1 : x2,
                               jump->mechanism, jump->site});
    }
  }
  g.partition = bully_partition(g);
  return g;
}

}  // namespace mtasep
