#include "mtasep/mlq.hpp"

#include <bit>
#include <sstream>

namespace mtasep {

namespace {

// Bit-reversal within the low `width` bits, mapping a column mask to the
// integer whose binary string (most significant first) is the printed row.
std::uint64_t reverse_bits(std::uint64_t v, int width) {
  std::uint64_t out = 0;
  for (int i = 0; i < width; ++i) {
    if ((v >> i) & 1U) out |= std::uint64_t{1} << (width - 1 - i);
  }
  return out;
}

std::vector<std::uint64_t> row_patterns(int columns, int filled) {
  std::vector<std::uint64_t> out;
  if (filled == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks the values of weight `filled` in increasing order.
  std::uint64_t v = (std::uint64_t{1} << filled) - 1;
  const std::uint64_t limit = std::uint64_t{1} << columns;
  while (v < limit) {
    out.push_back(reverse_bits(v, columns));
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

MultilineQueue::MultilineQueue(int columns, std::vector<std::uint64_t> rows)
    : columns_(columns), rows_(std::move(rows)) {
  if (columns_ <= 0 || columns_ > 64) {
    throw ValidationError("queue width must be in 1..64");
  }
}

MultilineQueue MultilineQueue::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ValidationError("empty queue grid");
  const auto width = lines.front().size();
  if (width == 0 || width > 64) throw ValidationError("queue width must be in 1..64");
  std::vector<std::uint64_t> rows;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width) {
      throw ValidationError("row " + std::to_string(r + 1) + " has length " +
                            std::to_string(lines[r].size()) + ", expected " +
                            std::to_string(width));
    }
    std::uint64_t bits = 0;
    for (std::size_t c = 0; c < width; ++c) {
      const char ch = lines[r][c];
      if (ch == '1') {
        bits |= std::uint64_t{1} << c;
      } else if (ch != '0') {
        throw ValidationError(std::string("unexpected character '") + ch + "' in queue grid");
      }
    }
    rows.push_back(bits);
  }
  MultilineQueue q(static_cast<int>(width), std::move(rows));
  q.composition();  // validates the row sums
  return q;
}

int MultilineQueue::occupancy(int r) const { return std::popcount(row(r)); }

Composition MultilineQueue::composition() const {
  std::vector<int> counts;
  int previous = 0;
  for (int r = 0; r < rows(); ++r) {
    const int filled = occupancy(r);
    if (filled <= previous) {
      throw ValidationError("row " + std::to_string(r + 1) + " holds " + std::to_string(filled) +
                            " particles; row sums must strictly increase from 1");
    }
    counts.push_back(filled - previous);
    previous = filled;
  }
  if (previous >= columns_) {
    throw ValidationError("bottom row must keep at least one vacancy");
  }
  counts.push_back(columns_ - previous);
  return Composition::make(counts);
}

std::string MultilineQueue::to_text() const {
  std::string out;
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < columns_; ++c) out.push_back(occupied(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string MultilineQueue::label() const {
  std::string out;
  for (int r = 0; r < rows(); ++r) {
    if (r) out.push_back('/');
    for (int c = 0; c < columns_; ++c) out.push_back(occupied(r, c) ? '1' : '0');
  }
  return out;
}

void MultilineQueue::set(int r, int col, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << wrap(col);
  auto& bits = rows_[static_cast<std::size_t>(r)];
  bits = value ? (bits | bit) : (bits & ~bit);
}

bool MultilineQueue::operator<(const MultilineQueue& other) const {
  if (columns_ != other.columns_) return columns_ < other.columns_;
  for (std::size_t r = 0; r < rows_.size() && r < other.rows_.size(); ++r) {
    const auto a = reverse_bits(rows_[r], columns_);
    const auto b = reverse_bits(other.rows_[r], columns_);
    if (a != b) return a < b;
  }
  return rows_.size() < other.rows_.size();
}

std::size_t MultilineQueueHash::operator()(const MultilineQueue& q) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(q.columns());
  for (int r = 0; r < q.rows(); ++r) {
    h ^= q.row(r) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<MultilineQueue> enumerate_mlqs(const Composition& c) {
  const int columns = c.size();
  const int rows = c.rows();
  std::vector<std::vector<std::uint64_t>> patterns;
  for (int r = 1; r <= rows; ++r) patterns.push_back(row_patterns(columns, c.prefix(r)));

  std::vector<MultilineQueue> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(rows), 0);
  std::vector<std::uint64_t> current(static_cast<std::size_t>(rows));
  while (true) {
    for (int r = 0; r < rows; ++r) {
      current[static_cast<std::size_t>(r)] = patterns[static_cast<std::size_t>(r)][digit[static_cast<std::size_t>(r)]];
    }
    out.emplace_back(columns, current);
    int r = rows - 1;
    while (r >= 0) {
      auto& d = digit[static_cast<std::size_t>(r)];
      if (++d < patterns[static_cast<std::size_t>(r)].size()) break;
      d = 0;
      --r;
    }
    if (r < 0) break;
  }
  return out;
}

RingingPath ringing_path(const MultilineQueue& q, int start) {
  RingingPath path;
  path.start = q.wrap(start);
  path.cols.assign(static_cast<std::size_t>(q.rows()), 0);
  int col = path.start;
  for (int r = q.rows() - 1; r >= 0; --r) {
    path.cols[static_cast<std::size_t>(r)] = col;
    if (!q.occupied(r, col)) col = q.wrap(col + 1);
  }
  return path;
}

MultilineQueue ringing_transition(const MultilineQueue& q, int start) {
  const RingingPath path = ringing_path(q, start);
  MultilineQueue next = q;
  for (int r = 0; r < q.rows(); ++r) {
    const int b = path.cols[static_cast<std::size_t>(r)];
    const int a = q.wrap(b - 1);
    if (!q.occupied(r, a) && q.occupied(r, b)) {
      next.set(r, a, true);
      next.set(r, b, false);
    }
  }
  return next;
}

std::vector<std::pair<MultilineQueue, int>> inverse_ringing_transitions(
    const MultilineQueue& q) {
  // A predecessor differs from q by at most one undone swap per row: q holds
  // an occupied cell at c-1 followed by a vacancy at c wherever a swap fired.
  // Enumerate every such choice per row and keep those confirmed by the
  // forward map.
  std::vector<std::vector<int>> options(static_cast<std::size_t>(q.rows()));
  for (int r = 0; r < q.rows(); ++r) {
    options[static_cast<std::size_t>(r)].push_back(-1);
    for (int c = 0; c < q.columns(); ++c) {
      if (q.occupied(r, c - 1) && !q.occupied(r, c)) {
        options[static_cast<std::size_t>(r)].push_back(c);
      }
    }
  }
  std::vector<std::pair<MultilineQueue, int>> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    MultilineQueue candidate = q;
    bool changed = false;
    for (std::size_t r = 0; r < options.size(); ++r) {
      const int c = options[r][pick[r]];
      if (c < 0) continue;
      candidate.set(static_cast<int>(r), c - 1, false);
      candidate.set(static_cast<int>(r), c, true);
      changed = true;
    }
    if (changed) {
      for (int start = 0; start < q.columns(); ++start) {
        if (ringing_transition(candidate, start) == q) out.emplace_back(candidate, start);
      }
    }
    std::size_t r = options.size();
    while (r > 0) {
      --r;
      if (++pick[r] < options[r].size()) break;
      pick[r] = 0;
      if (r == 0) return out;
    }
    if (options.empty()) return out;
  }
}

}  // namespace mtasep
