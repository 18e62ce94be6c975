#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mtasep/composition.hpp"

namespace mtasep {

/// A ring-indexed multipermutation: `sites[i]` is the (1-based) class of the
/// particle at site i. Site arithmetic is modulo `size()`.
struct Word {
  std::vector<int> sites;

  int size() const { return static_cast<int>(sites.size()); }
  int at(int i) const {
    const int n = size();
    return sites[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  /// Space-separated classes, e.g. "4 5 2 3 5 3 4 1".
  std::string to_string() const;
  /// Concatenated classes ("321"); falls back to `to_string()` when a class
  /// has more than one digit.
  std::string label() const;
  /// Cyclic shift: result[i] = sites[i + k].
  Word rotated(int k) const;
  /// Species-count vector of the word (entries may be zero).
  std::vector<int> content() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

/// Parses space-separated 1-based classes. A token without spaces such as
/// "321" is read digit by digit.
Word parse_word(const std::string& text);

/// Every word of the given content in lexicographic order.
std::vector<Word> enumerate_words(const Composition& c);

/// True iff the word uses exactly the counts of `c`.
bool has_content(const Word& w, const Composition& c);

}  // namespace mtasep
