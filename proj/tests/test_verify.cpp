#include <algorithm>

#include "doctest.h"
#include "mtasep/verify.hpp"

using namespace mtasep;

namespace {

Composition comp(std::initializer_list<int> m) { return Composition::make(m); }

}  // namespace

TEST_CASE("fm3 suite") {
  const Report r = check_fm3_theorem(comp({1, 1, 1}));
  CHECK(r.ok);
  CHECK(r.status() == "pass");
  CHECK(r.details["block_sums"] ==
        nlohmann::json::array({"x1 + x2", "x1", "x1", "x1 + x2", "x1 + x2", "x1"}));
  CHECK(r.details["conjectured_weight_agrees"] == true);
  CHECK(check_fm3_theorem(comp({2, 1, 1})).ok);
  const Report big = check_fm3_theorem(comp({1, 1, 4}));
  CHECK(big.ok);
  CHECK(big.details["states"] == 90);
  CHECK_THROWS(check_fm3_theorem(comp({1, 1, 1, 1})));
}

TEST_CASE("fm3 suite at N = 6 uses rate points") {
  const Report r = check_fm3_theorem(comp({2, 2, 2}));
  CHECK(r.ok);
  CHECK(r.details["tasep_check"] == "5 rate points");
}

TEST_CASE("fm1 suite") {
  for (auto c : {comp({1, 1, 1}), comp({1, 2, 2}), comp({1, 1, 1, 1})}) {
    const Report r = check_fm1_theorem(c);
    CHECK_MESSAGE(r.ok, r.to_json().dump());
    CHECK(r.details["solved_at"].size() == 3);
  }
  CHECK_THROWS(check_fm1_theorem(comp({2, 1, 1})));
}

TEST_CASE("partition function") {
  const Report a = check_partition_function(comp({1, 1, 1}));
  CHECK(a.ok);
  CHECK(a.details["sum"] == "6*a + 3");
  CHECK(a.details["h_form_matches"] == true);

  const Report b = check_partition_function(comp({1, 2, 2}));
  CHECK(b.ok);
  CHECK(b.details["sum"] == "30*a^2 + 15*a + 5");
  CHECK(b.details["h_form_matches"] == false);

  CHECK(check_partition_function(comp({1, 1, 1, 1})).ok);
  CHECK(check_partition_function(comp({1, 1, 1, 1})).details["h_form_matches"] == true);
}

TEST_CASE("main conjecture") {
  const Report r = check_main_conjecture(comp({1, 1, 1}));
  CHECK(r.status() == "agree");
  CHECK(r.details["aggregated"] ==
        nlohmann::json::array({"x1 + x2", "x1", "x1", "x1 + x2", "x1 + x2", "x1"}));
  const Report two = check_main_conjecture(comp({2, 3}));
  CHECK(two.ok);
  for (const auto& c : compositions_up_to(4)) CHECK(check_main_conjecture(c).ok);
}

TEST_CASE("Lam-Williams normalization") {
  const Report r3 = check_lw_normalization_and_positivity(3);
  CHECK(r3.ok);
  CHECK(r3.details["factor"] == "1");
  CHECK(r3.details["normalized"].back() == "x1");
  CHECK(r3.details["positive"] == 6);
  const Report r4 = check_lw_normalization_and_positivity(4);
  CHECK(r4.ok);
  CHECK(r4.details["positive"] == 24);
}

TEST_CASE("identity count") {
  const int expected[] = {0, 0, 1, 2, 9, 96};
  for (int n = 2; n <= 5; ++n) {
    const Report r = check_identity_count(n);
    CHECK(r.status() == "agree");
    CHECK(r.details["count"] == expected[n]);
    CHECK(r.details["formula"] == expected[n]);
  }
}

TEST_CASE("uniform stationarity") {
  for (auto c : {comp({1, 1, 1}), comp({1, 1, 2}), comp({2, 1, 1})}) {
    const Report r = check_uniform_stationarity(c);
    CHECK(r.ok);
    CHECK(r.details["method"] == "exact solve");
  }
  CHECK(check_uniform_stationarity(comp({1, 1, 2})).details["states"] == 24);
}

TEST_CASE("coupe suite") {
  const Report r = check_coupe_theorem(comp({1, 1, 1}));
  CHECK(r.ok);
  CHECK(r.details["transitions"] == 12);
  CHECK(check_coupe_theorem(comp({1, 1, 2})).ok);
  CHECK(check_coupe_theorem(comp({2, 2, 2})).ok);
}

TEST_CASE("three-species lemma") {
  for (auto c : {comp({1, 1, 1}), comp({2, 1, 2}), comp({1, 3, 2})}) CHECK(check_three_species_lemma(c).ok);
}

TEST_CASE("suite driver") {
  VerifyOptions o;
  o.max_size = 4;
  int reports = 0;
  bool ok = true;
  std::vector<std::string> seen;
  run_suite("all", o, [&](const Report& r) {
    ++reports;
    ok = ok && r.ok;
    seen.push_back(r.suite + ":" + r.subject);
  });
  CHECK(ok);
  CHECK(std::find(seen.begin(), seen.end(), "fm3:1,1,1") != seen.end());
  CHECK(std::find(seen.begin(), seen.end(), "identity:1,1,1,1") != seen.end());
  CHECK(reports > 40);
  CHECK_THROWS_AS(run_suite("nope", o, [](const Report&) {}), ValidationError);
}

TEST_CASE("report JSON") {
  Report r;
  r.suite = "main";
  r.subject = "1,2";
  r.theorem = false;
  r.ok = false;
  r.counterexample = "state 12";
  const auto j = r.to_json();
  CHECK(j["status"] == "disagree");
  CHECK(j["counterexample"] == "state 12");
  CHECK(j.contains("elapsed"));
  r.theorem = true;
  CHECK(r.status() == "fail");
}
