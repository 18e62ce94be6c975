#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mtasep/mlq.hpp"

namespace fixtures {

// Builds a grid from '0'/'1' row strings without checking row sums, so that
// ring fragments with equal row counts can be used too.
inline mtasep::MultilineQueue grid(const std::vector<std::string>& rows) {
  std::vector<std::uint64_t> bits;
  for (const auto& r : rows) {
    std::uint64_t b = 0;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == '1') b |= std::uint64_t{1} << c;
    }
    bits.push_back(b);
  }
  return mtasep::MultilineQueue(static_cast<int>(rows.front().size()), bits);
}

inline std::string text(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

// Three-species queues on three sites, keyed by the labels of the figures.
struct FigureState {
  const char* name;
  const char* rows;  // top/bottom
  const char* word;
  const char* weight;
};

inline const std::vector<FigureState>& figure4_states() {
  static const std::vector<FigureState> s{
      {"A", "001/011", "321", "x1"}, {"B", "010/011", "312", "x1"}, {"C", "100/011", "312", "x2"},
      {"D", "001/101", "231", "x1"}, {"E", "010/101", "231", "x2"}, {"F", "100/101", "132", "x1"},
      {"G", "001/110", "123", "x2"}, {"H", "010/110", "213", "x1"}, {"I", "100/110", "123", "x1"},
  };
  return s;
}

struct Edge {
  std::string from;
  std::string to;
  std::string rate;
  bool operator<(const Edge& o) const {
    return std::tie(from, to, rate) < std::tie(o.from, o.to, o.rate);
  }
  bool operator==(const Edge& o) const = default;
};

// Words of the ring TASEP with m = (1,1,1).
inline std::vector<Edge> figure1_edges() {
  return {{"321", "231", "x2"}, {"321", "312", "x1"}, {"231", "213", "x1"},
          {"213", "123", "x1"}, {"132", "123", "x2"}, {"312", "132", "x1"},
          {"123", "321", "x1"}, {"132", "231", "x1"}, {"213", "312", "x2"}};
}

// Lex basis 123 132 213 231 312 321; entry (a, b) is the rate from b to a.
inline std::vector<std::vector<std::string>> figure1_matrix() {
  return {{"-x1", "x2", "x1", "0", "0", "0"},      {"0", "-x1 - x2", "0", "0", "x1", "0"},
          {"0", "0", "-x1 - x2", "x1", "0", "0"},  {"0", "x1", "0", "-x1", "0", "x2"},
          {"0", "0", "x2", "0", "-x1", "x1"},      {"x1", "0", "0", "0", "0", "-x1 - x2"}};
}

// Figure-4 ringing chain, by state name.
inline std::vector<Edge> figure4_edges() {
  return {{"A", "D", "x2"}, {"A", "B", "x1"}, {"D", "H", "x1"}, {"H", "I", "x1"}, {"F", "I", "x2"},
          {"B", "F", "x1"}, {"I", "A", "x1"}, {"F", "D", "x1"}, {"H", "B", "x2"}, {"B", "C", "x2"},
          {"D", "E", "x2"}, {"I", "G", "x2"}, {"C", "F", "x1"}, {"E", "H", "x1"}, {"G", "A", "x1"}};
}

// Figure-5 coupe chain, by state name.
inline std::vector<Edge> figure5_edges() {
  return {{"A", "E", "x2"}, {"A", "B", "x1"}, {"D", "H", "x1"}, {"H", "I", "x1"},
          {"F", "G", "x2"}, {"B", "F", "x1"}, {"I", "A", "x1"}, {"F", "D", "x1"},
          {"H", "C", "x2"}, {"C", "F", "x1"}, {"E", "H", "x1"}, {"G", "A", "x1"}};
}

}  // namespace fixtures
