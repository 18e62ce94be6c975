#include "mtasep/composition.hpp"

#include <sstream>

namespace mtasep {

Composition Composition::make(std::span<const int> counts) {
  if (counts.size() < 2) {
    throw ValidationError("a composition needs at least two species, got " +
                          std::to_string(counts.size()));
  }
  Composition c;
  c.counts_.assign(counts.begin(), counts.end());
  int running = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] <= 0) {
      throw ValidationError("m_" + std::to_string(j + 1) + " must be positive");
    }
    running += counts[j];
    c.prefix_.push_back(running);
  }
  c.size_ = running;
  return c;
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> counts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ValidationError("not an integer in composition: '" + token + "'");
    }
    if (used != token.size()) {
      throw ValidationError("not an integer in composition: '" + token + "'");
    }
    counts.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return make(counts);
}

int Composition::vacancies_below(int r) const {
  int total = 0;
  for (int i = r + 1; i <= rows(); ++i) total += vacancies(i);
  return total;
}

std::string Composition::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (j) out << ',';
    out << counts_[j];
  }
  return out.str();
}

namespace {

void extend(std::vector<int>& prefix, int remaining, int parts,
            std::vector<Composition>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(Composition::make(prefix));
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (parts - 1); ++first) {
    prefix.push_back(first);
    extend(prefix, remaining - first, parts - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int total, int parts) {
  std::vector<Composition> out;
  if (parts < 2 || total < parts) return out;
  std::vector<int> prefix;
  extend(prefix, total, parts, out);
  return out;
}

std::vector<Composition> compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int total = 2; total <= max_size; ++total) {
    for (int parts = 2; parts <= total; ++parts) {
      auto batch = compositions_of(total, parts);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace mtasep
