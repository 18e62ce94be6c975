#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtasep/bully.hpp"
#include "mtasep/composition.hpp"
#include "mtasep/coupe.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/word.hpp"

using namespace mtasep;

namespace {

long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long multinomial(const std::vector<int>& m) {
  long long r = 1;
  int used = 0;
  for (int x : m) {
    used += x;
    r *= choose(used, x);
  }
  return r;
}

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

}  // namespace

TEST_CASE("composition accessors") {
  const Composition c = Composition::make({1, 2, 2});
  CHECK(c.species() == 3);
  CHECK(c.size() == 5);
  CHECK(c.prefix(1) == 1);
  CHECK(c.prefix(2) == 3);
  CHECK(c.vacancies(1) == 4);
  CHECK(c.vacancies(2) == 2);
  CHECK(c.vacancies_below(1) == 2);
  CHECK(c.vacancies_below(2) == 0);
  CHECK(c.rows() == 2);
  CHECK(c.to_string() == "1,2,2");
  CHECK(Composition::parse("1 2 2") == c);
}

TEST_CASE("composition validation") {
  CHECK_THROWS_AS(Composition::make({1, 0, 2}), ValidationError);
  CHECK_THROWS_WITH(Composition::make({1, 0, 2}), doctest::Contains("m_2"));
  CHECK_THROWS_AS(Composition::make({3}), ValidationError);
  CHECK_THROWS_AS(Composition::parse("1,x"), ValidationError);
  CHECK_THROWS_AS(Composition::parse("-1,2"), ValidationError);
}

TEST_CASE("compositions_up_to counts") {
  // compositions of N into at least two parts: 2^{N-1} - 1
  std::map<int, int> per_size;
  for (const auto& c : compositions_up_to(6)) ++per_size[c.size()];
  for (int n = 2; n <= 6; ++n) CHECK(per_size[n] == (1 << (n - 1)) - 1);
}

TEST_CASE("word enumeration") {
  const auto words = enumerate_words(Composition::make({1, 1, 1}));
  REQUIRE(words.size() == 6);
  CHECK(words.front().to_string() == "1 2 3");
  CHECK(words.back().label() == "321");
  CHECK(std::is_sorted(words.begin(), words.end()));
  for (const auto& m : std::vector<std::vector<int>>{{2, 1}, {1, 2, 3}, {2, 2, 1, 1}}) {
    const Composition c = Composition::make(m);
    const auto all = enumerate_words(c);
    CHECK(static_cast<long long>(all.size()) == multinomial(m));
    for (const auto& w : all) CHECK(has_content(w, c));
  }
}

TEST_CASE("word parsing and rotation") {
  CHECK(parse_word("321").sites == std::vector<int>{3, 2, 1});
  CHECK(parse_word("4 5 2 3").sites == std::vector<int>{4, 5, 2, 3});
  CHECK(parse_word("123").rotated(1).label() == "231");
  CHECK(parse_word("123").at(-1) == 3);
  CHECK_THROWS_AS(parse_word("1 a"), ValidationError);
}

TEST_CASE("queue enumeration matches brute force over all grids") {
  for (const auto& m : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1, 1}, {1, 1, 2}, {1, 1, 1, 1}}) {
    const Composition c = Composition::make(m);
    const int N = c.size();
    const int rows = c.rows();
    std::set<MultilineQueue> brute;
    const std::uint64_t mask = (std::uint64_t{1} << N) - 1;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (N * rows)); ++code) {
      std::vector<std::uint64_t> r;
      bool ok = true;
      for (int k = 0; k < rows; ++k) {
        r.push_back((code >> (k * N)) & mask);
        ok = ok && popcount(r.back()) == c.prefix(k + 1);
      }
      if (ok) brute.insert(MultilineQueue(N, r));
    }
    const auto listed = enumerate_mlqs(c);
    CHECK(listed.size() == brute.size());
    CHECK(std::is_sorted(listed.begin(), listed.end()));
    CHECK(std::set<MultilineQueue>(listed.begin(), listed.end()) == brute);
    long long product = 1;
    for (int k = 1; k <= rows; ++k) product *= choose(N, c.prefix(k));
    CHECK(static_cast<long long>(listed.size()) == product);
  }
}

TEST_CASE("queue text format") {
  const auto q = MultilineQueue::parse("001\n011\n");
  CHECK(q.label() == "001/011");
  CHECK(q.composition() == Composition::make({1, 1, 1}));
  CHECK(q.to_text() == "001\n011\n");
  CHECK_THROWS_AS(MultilineQueue::parse("001\n01\n"), ValidationError);
  CHECK_THROWS_AS(MultilineQueue::parse("011\n011\n"), ValidationError);
  CHECK_THROWS_AS(MultilineQueue::parse("0a1\n011\n"), ValidationError);
  CHECK_THROWS_AS(MultilineQueue::parse("111\n"), ValidationError);
  CHECK_THROWS_AS(MultilineQueue::parse(""), ValidationError);
}

TEST_CASE("figure 2 queue: projection and ringing path") {
  const std::vector<std::string> rows{"00000010", "00100010", "00110101", "10110111"};
  const auto q = MultilineQueue::parse(fixtures::text(rows));
  CHECK(bully_projection(q).word.to_string() == "4 5 2 3 5 3 4 1");

  const RingingPath p = ringing_path(q, 4);
  CHECK(p.cols == std::vector<int>{6, 5, 5, 4});
  const auto next = ringing_transition(q, 4);
  CHECK(next == fixtures::grid({"00000100", "00100010", "00111001", "10110111"}));

  const RingingPath idle = ringing_path(q, 3);
  CHECK(idle.cols == std::vector<int>{4, 3, 3, 3});
  CHECK(ringing_transition(q, 3) == q);
}

TEST_CASE("figure 3 queue: projection, z statistics and weight") {
  const auto q = MultilineQueue::parse(
      fixtures::text({"001000", "011000", "100011", "110101", "111110"}));
  const BullyLabeling lab = bully_projection(q);
  CHECK(lab.word.to_string() == "1 2 3 4 5 6");
  CHECK(lab.z[3][1] == 2);
  CHECK(lab.z[4][1] == 1);
  CHECK(lab.z[5][1] == 1);
  CHECK(lab.z[3][2] == 1);
  int total = 0;
  for (const auto& row : lab.z) {
    for (int v : row) total += v;
  }
  CHECK(total == 5);
  CHECK(conjectured_weight(q).to_string() == "x1^6*x2^5*x3^6*x4^2*x5");
}

TEST_CASE("two-species projection") {
  CHECK(bully_projection(MultilineQueue::parse("10\n")).word.to_string() == "1 2");
  CHECK(conjectured_weight(MultilineQueue::parse("10\n")).to_string() == "1");
}

TEST_CASE("figure 4 states project to the figure's words and weights") {
  const Composition c = Composition::make({1, 1, 1});
  for (const auto& s : fixtures::figure4_states()) {
    std::string rows = s.rows;
    std::replace(rows.begin(), rows.end(), '/', '\n');
    const auto q = MultilineQueue::parse(rows + "\n");
    const BullyLabeling lab = bully_projection(q);
    CHECK(lab.word.label() == s.word);
    CHECK(fm3_weight(c, lab).to_string() == s.weight);
    CHECK(conjectured_weight(c, lab).to_string() == s.weight);
  }
}

TEST_CASE("projection does not depend on processing order") {
  std::mt19937 gen(7);
  const ProcessingOrder reversed = [](int, int, std::vector<int>& cols) {
    std::reverse(cols.begin(), cols.end());
  };
  const ProcessingOrder shuffled = [&gen](int, int, std::vector<int>& cols) {
    std::shuffle(cols.begin(), cols.end(), gen);
  };
  for (const auto& c : compositions_up_to(5)) {
    for (const auto& q : enumerate_mlqs(c)) {
      const BullyLabeling base = bully_projection(q);
      REQUIRE(base == bully_projection(q, reversed));
      REQUIRE(base == bully_projection(q, shuffled));
    }
  }
}

TEST_CASE("ringing transitions act on projections as one TASEP swap") {
  for (const auto& c : compositions_up_to(5)) {
    for (const auto& q : enumerate_mlqs(c)) {
      const Word w = bully_projection(q).word;
      REQUIRE(has_content(w, c));
      for (int i = 0; i < c.size(); ++i) {
        const Word after = bully_projection(ringing_transition(q, i)).word;
        if (after == w) continue;
        Word swapped = w;
        const int left = (i + c.size() - 1) % c.size();
        std::swap(swapped.sites[static_cast<std::size_t>(left)], swapped.sites[static_cast<std::size_t>(i)]);
        REQUIRE(w.at(i - 1) > w.at(i));
        REQUIRE(after == swapped);
      }
    }
  }
}

TEST_CASE("inverse ringing transitions agree with exhaustive search") {
  for (const auto& m : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 1}, {2, 1, 2}, {1, 1, 1, 1}}) {
    const Composition c = Composition::make(m);
    const auto all = enumerate_mlqs(c);
    std::map<MultilineQueue, std::set<std::pair<MultilineQueue, int>>> preds;
    for (const auto& p : all) {
      for (int i = 0; i < c.size(); ++i) {
        const auto q = ringing_transition(p, i);
        if (q != p) preds[q].insert({p, i});
      }
    }
    for (const auto& q : all) {
      const auto found = inverse_ringing_transitions(q);
      const std::set<std::pair<MultilineQueue, int>> got(found.begin(), found.end());
      REQUIRE(got.size() == found.size());
      REQUIRE(got == preds[q]);
    }
  }
}

TEST_CASE("truncated projection reads the top rows") {
  const auto q = MultilineQueue::parse(
      fixtures::text({"001000", "011000", "100011", "110101", "111110"}));
  const BullyLabeling lab = bully_projection(q);
  const Word top = truncated_projection(lab, 1);
  CHECK(top.to_string() == "2 2 1 2 2 2");
  const Word two = truncated_projection(lab, 2);
  CHECK(std::count(two.sites.begin(), two.sites.end(), 1) == 1);
  CHECK(std::count(two.sites.begin(), two.sites.end(), 2) == 1);
  CHECK(std::count(two.sites.begin(), two.sites.end(), 3) == 4);
  CHECK(truncated_projection(lab, 5) == lab.word);
}

TEST_CASE("coupe decomposition") {
  const auto coupes = decompose_coupes(parse_word("32333113"));
  // 3 2 | 3 3 3 1 1 | 3 ... wraps
  REQUIRE(coupes.size() == 2);
  CHECK(coupes[0].start == 2);
  CHECK(coupes[0].front == 5);
  CHECK(coupes[0].back == 6);
  CHECK(coupes[0].cls == 1);
  CHECK_FALSE(coupes[0].full);
  CHECK(coupes[1].start == 7);
  CHECK(coupes[1].length == 3);
  CHECK(coupes[1].front == 1);
  CHECK(coupes[1].cls == 2);

  const auto full = decompose_coupes(parse_word("1122"));
  REQUIRE(full.size() == 2);
  CHECK(full[0].full);
  CHECK(full[1].full);
  CHECK(full[1].cls == 2);

  CHECK_THROWS_AS(decompose_coupes(parse_word("333")), ValidationError);
  CHECK_THROWS_AS(decompose_coupes(parse_word("1234")), ValidationError);
}

TEST_CASE("coupe jumps reproduce the displayed examples") {
  using fixtures::grid;
  const auto coupes = decompose_coupes(parse_word("33113"));
  REQUIRE(coupes.size() == 1);
  CHECK(coupes[0].front == 2);

  auto jump = coupe_jump(grid({"00110", "00110"}), coupes, 0);
  REQUIRE(jump);
  CHECK(jump->mechanism == Mechanism::CoupeRegular);
  CHECK(jump->target == grid({"01010", "01010"}));

  jump = coupe_jump(grid({"01100", "00110"}), coupes, 0);
  REQUIRE(jump);
  CHECK(jump->mechanism == Mechanism::CoupeRegular);
  CHECK(jump->target == grid({"01100", "01010"}));

  jump = coupe_jump(grid({"01010", "00110"}), coupes, 0);
  REQUIRE(jump);
  CHECK(jump->mechanism == Mechanism::CoupePulling);
  CHECK(jump->target == grid({"01100", "01010"}));

  const auto q = grid({"00010010", "00100110"});
  const Word w = bully_projection(q).word;
  CHECK(w.label() == "33233113");
  const auto ring = decompose_coupes(w);
  std::size_t second = ring.size();
  for (std::size_t k = 0; k < ring.size(); ++k) {
    if (ring[k].cls == 2) second = k;
  }
  REQUIRE(second < ring.size());
  jump = coupe_jump(q, ring, second);
  REQUIRE(jump);
  CHECK(jump->mechanism == Mechanism::CoupePulling);
  CHECK(jump->jumper_class == 2);
  CHECK(jump->target == grid({"00100100", "01000110"}));
  CHECK(bully_projection(jump->target).word.label() == "32333113");
}

TEST_CASE("full second-class coupes do not jump") {
  const auto q = MultilineQueue::parse("100\n110\n");
  const Word w = bully_projection(q).word;
  REQUIRE(w.label() == "123");
  const auto coupes = decompose_coupes(w);
  for (std::size_t k = 0; k < coupes.size(); ++k) {
    if (coupes[k].cls == 2 && coupes[k].full) CHECK_FALSE(coupe_jump(q, coupes, k));
  }
}
