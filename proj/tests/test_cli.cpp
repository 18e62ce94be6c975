#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mtasep/chain.hpp"
#include "mtasep/cli.hpp"

using namespace mtasep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "mtasep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run words = run({"enumerate", "words", "-m", "1,1,1"});
  CHECK(words.code == 0);
  const auto l = lines(words.out);
  REQUIRE(l.size() == 6);
  CHECK(l.front() == "1 2 3");

  const Run count_only = run({"enumerate", "mlqs", "-m", "1,1,1", "--count-only"});
  CHECK(count_only.code == 0);
  CHECK(count_only.out == "9\n");

  const Run js = run({"enumerate", "mlqs", "-m", "1,1,1", "--format", "json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["count"] == 9);
  CHECK(doc["items"][0] == nlohmann::json::array({"001", "011"}));

  CHECK(run({"enumerate", "words", "-m", "1,0,2"}).code == 2);
  CHECK(run({"enumerate", "letters", "-m", "1,1"}).code == 2);
  CHECK(run({"enumerate", "words"}).code == 2);
}

TEST_CASE("project") {
  const Run fig3 = run({"project"}, "001000\n011000\n100011\n110101\n111110\n");
  CHECK(fig3.code == 0);
  CHECK(fig3.out.find("word: 1 2 3 4 5 6\n") != std::string::npos);
  CHECK(fig3.out.find("weight: x1^6*x2^5*x3^6*x4^2*x5\n") != std::string::npos);
  CHECK(fig3.out.find("row 3: 2 1\n") != std::string::npos);

  const Run fig2 = run({"project", "-", "--format", "json"}, "00000010\n00100010\n00110101\n10110111\n");
  CHECK(fig2.code == 0);
  CHECK(nlohmann::json::parse(fig2.out)["word"] == "4 5 2 3 5 3 4 1");

  const std::string path = "test_cli_queue.txt";
  std::ofstream(path) << "10\n";
  const Run tiny = run({"project", path});
  CHECK(tiny.code == 0);
  CHECK(tiny.out.rfind("word: 1 2\n", 0) == 0);
  std::remove(path.c_str());

  CHECK(run({"project"}, "011\n01\n").code == 2);
  CHECK(run({"project"}, "011\n011\n").code == 2);
  CHECK(run({"project", "no-such-file"}).code == 2);
}

TEST_CASE("chain") {
  const Run solved = run({"chain", "tasep", "-m", "1,1,1", "--solve", "x1=2,x2=1"});
  CHECK(solved.code == 0);
  CHECK(solved.out == "123:3 132:2 213:2 231:3 312:3 321:2\n");
  CHECK(run({"chain", "tasep", "-m", "1,1,1", "--solve", "2,1"}).out == solved.out);

  const Run dot = run({"chain", "fm3", "-m", "1,1,1", "--export", "dot"});
  CHECK(dot.code == 0);
  CHECK(count(dot.out, "[label=\"") == 9 + 15);

  const Run js = run({"chain", "coupe", "-m", "1,1,2", "--export", "json"});
  CHECK(js.code == 0);
  const AnyChain back = chain_from_json(js.out);
  CHECK(to_json(std::get<QueueChain>(back)) + "\n" == js.out);

  const Run listing = run({"chain", "tasep", "-m", "1,1,1"});
  CHECK(listing.out.rfind("6 states, 9 transitions\n", 0) == 0);

  CHECK(run({"chain", "coupe", "-m", "1,1,1,1"}).code == 2);
  CHECK(run({"chain", "fm1", "-m", "2,1,1"}).code == 2);
  CHECK(run({"chain", "tasep", "-m", "1,1,1", "--solve", "x1=2"}).code == 2);
  CHECK(run({"chain", "tasep", "-m", "1,1,1", "--solve", "x1=0,x2=1"}).code == 2);
}

TEST_CASE("verify") {
  const Run fm3 = run({"verify", "fm3", "--max-N", "3"});
  CHECK(fm3.code == 0);
  const auto l = lines(fm3.out);
  REQUIRE(l.size() == 1);
  const auto doc = nlohmann::json::parse(l[0]);
  CHECK(doc["suite"] == "fm3");
  CHECK(doc["composition"] == "1,1,1");
  CHECK(doc["status"] == "pass");

  const Run identity = run({"verify", "identity", "--max-N", "5"});
  CHECK(identity.code == 0);
  const auto last = nlohmann::json::parse(lines(identity.out).back());
  CHECK(last["details"]["count"] == 96);
  CHECK(last["details"]["formula"] == 96);

  const Run all = run({"verify", "all", "--max-N", "4"});
  CHECK(all.code == 0);
  for (const auto& line : lines(all.out)) {
    const auto s = nlohmann::json::parse(line)["status"];
    CHECK((s == "pass" || s == "agree"));
  }
  CHECK(run({"verify", "everything"}).code == 2);
}

TEST_CASE("simulate") {
  const Run exact = run({"simulate", "tasep", "-m", "1,1,1", "--rates", "2,1", "--events", "1000000",
                         "--compare-exact"});
  CHECK(exact.code == 0);
  CHECK(lines(exact.out).size() == 7);
  CHECK(lines(exact.out)[0] == "state,fraction,exact,z");
  CHECK(exact.err.find("pass") != std::string::npos);

  const Run a = run({"simulate", "tasep", "-m", "1,1,1", "--rates", "2,1", "--seed", "7"});
  const Run b = run({"simulate", "tasep", "-m", "1,1,1", "--rates", "2,1", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const Run fm = run({"simulate", "fm", "-m", "1,1,1", "--rates", "1,1", "--events", "1000000",
                      "--compare-exact"});
  CHECK(fm.code == 0);
  CHECK(lines(fm.out).size() == 10);

  const Run projected = run({"simulate", "coupe", "-m", "1,1,1", "--rates", "2,1", "--project",
                             "--compare-exact"});
  CHECK(projected.code == 0);
  CHECK(lines(projected.out)[1].rfind("123,", 0) == 0);

  const Run tight = run({"simulate", "tasep", "-m", "1,1,1", "--rates", "2,1", "--events", "1000",
                         "--compare-exact", "--tolerance", "0.000001"});
  CHECK(tight.code == 1);
  CHECK(run({"simulate", "tasep", "-m", "1,1,1", "--rates", "2,-1"}).code == 2);
  CHECK(run({"simulate", "tasep", "-m", "1,1,1", "--project"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run({}).code == 2);
}
