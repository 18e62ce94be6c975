#include "mtasep/word.hpp"

#include <algorithm>
#include <sstream>

namespace mtasep {

std::string Word::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) out << ' ';
    out << sites[i];
  }
  return out.str();
}

std::string Word::label() const {
  if (std::any_of(sites.begin(), sites.end(), [](int s) { return s > 9; })) {
    return to_string();
  }
  std::string out;
  for (int s : sites) out.push_back(static_cast<char>('0' + s));
  return out;
}

Word Word::rotated(int k) const {
  Word out;
  out.sites.reserve(sites.size());
  for (int i = 0; i < size(); ++i) out.sites.push_back(at(i + k));
  return out;
}

std::vector<int> Word::content() const {
  int top = sites.empty() ? 0 : *std::max_element(sites.begin(), sites.end());
  std::vector<int> counts(static_cast<std::size_t>(std::max(top, 0)), 0);
  for (int s : sites) ++counts[static_cast<std::size_t>(s - 1)];
  return counts;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  Word w;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char ch : tokens[0]) {
      if (ch < '1' || ch > '9') throw ValidationError("bad class in word: '" + tokens[0] + "'");
      w.sites.push_back(ch - '0');
    }
    return w;
  }
  for (const auto& tok : tokens) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad class in word: '" + tok + "'");
    }
    if (used != tok.size() || value < 1) {
      throw ValidationError("bad class in word: '" + tok + "'");
    }
    w.sites.push_back(value);
  }
  if (w.sites.empty()) throw ValidationError("empty word");
  return w;
}

std::vector<Word> enumerate_words(const Composition& c) {
  Word w;
  for (int j = 1; j <= c.species(); ++j) {
    w.sites.insert(w.sites.end(), static_cast<std::size_t>(c.count(j)), j);
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.sites.begin(), w.sites.end()));
  return out;
}

bool has_content(const Word& w, const Composition& c) {
  if (w.size() != c.size()) return false;
  auto counts = w.content();
  if (static_cast<int>(counts.size()) != c.species()) return false;
  for (int j = 1; j <= c.species(); ++j) {
    if (counts[static_cast<std::size_t>(j - 1)] != c.count(j)) return false;
  }
  return true;
}

}  // namespace mtasep
