#include "mtasep/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtasep/bully.hpp"
#include "mtasep/chain.hpp"
#include "mtasep/sim.hpp"
#include "mtasep/solve.hpp"
#include "mtasep/verify.hpp"

namespace mtasep {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "x1=2,x2=1" or "2,1".
std::vector<BigRational> parse_point(const std::string& text, int nvars) {
  std::vector<BigRational> point(static_cast<std::size_t>(nvars));
  std::vector<bool> given(static_cast<std::size_t>(nvars), false);
  const auto items = split(text, ',');
  for (std::size_t k = 0; k < items.size(); ++k) {
    std::string value = items[k];
    std::size_t index = k;
    if (auto eq = value.find('='); eq != std::string::npos) {
      const std::string name = value.substr(0, eq);
      value = value.substr(eq + 1);
      if (name.size() < 2 || name[0] != 'x') throw ValidationError("bad variable name '" + name + "'");
      index = std::stoul(name.substr(1)) - 1;
    }
    if (index >= point.size()) {
      throw ValidationError("chain has " + std::to_string(nvars) + " rate variables");
    }
    point[index] = parse_rational(value);
    given[index] = true;
  }
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (!given[i]) throw ValidationError("missing value for x" + std::to_string(i + 1));
  }
  return point;
}

template <class Chain>
std::vector<std::string> labels_of(const Chain& g) {
  std::vector<std::string> out;
  for (const auto& s : g.states) out.push_back(state_label(s));
  return out;
}

void print_transitions(const AnyChain& any, std::ostream& out) {
  std::visit(
      [&](const auto& g) {
        out << g.size() << " states, " << g.transitions.size() << " transitions\n";
        for (const Transition& t : g.transitions) {
          out << state_label(g.states[t.from]) << " -> " << state_label(g.states[t.to]) << "  "
              << t.rate.to_string(rate_names(g.nvars)) << "  " << to_string(t.mechanism)
              << " site " << t.site + 1 << '\n';
        }
      },
      any);
}

int cmd_enumerate(const std::string& kind, const std::string& m, const std::string& format,
                  bool count_only, std::ostream& out, std::ostream& err) {
  const Composition c = Composition::parse(m);
  std::vector<std::string> items;
  json jitems = json::array();
  if (kind == "words") {
    for (const Word& w : enumerate_words(c)) {
      items.push_back(w.to_string());
      jitems.push_back(w.to_string());
    }
  } else {
    for (const MultilineQueue& q : enumerate_mlqs(c)) {
      std::string text = q.to_text();
      items.push_back(text);
      jitems.push_back(split(text, '\n'));
    }
  }
  if (count_only) {
    out << items.size() << '\n';
    return kExitOk;
  }
  if (format == "json") {
    out << json{{"kind", kind}, {"composition", c.counts()}, {"count", items.size()}, {"items", jitems}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (kind == "mlqs" && i > 0) out << '\n';
    out << items[i];
    if (kind == "words") out << '\n';
  }
  err << items.size() << ' ' << kind << '\n';
  return kExitOk;
}

int cmd_project(const std::string& file, const std::string& format, std::istream& in,
                std::ostream& out) {
  std::string text;
  if (file.empty() || file == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(file);
    if (!f) throw ValidationError("cannot read '" + file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  const MultilineQueue q = MultilineQueue::parse(text);
  const Composition c = q.composition();
  const BullyLabeling lab = bully_projection(q);
  const LaurentPoly w = conjectured_weight(c, lab);
  const int n = c.species();
  if (format == "json") {
    json z = json::array();
    for (int r = 2; r <= n; ++r) {
      json row = json::array();
      for (int i = 1; i < r; ++i) row.push_back(lab.z[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
      z.push_back(row);
    }
    out << json{{"word", lab.word.to_string()},
                {"composition", c.counts()},
                {"z", z},
                {"weight", w.to_string(rate_names(n - 1))}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "word: " << lab.word.to_string() << '\n';
  out << "z:\n";
  for (int r = 2; r <= n; ++r) {
    out << "  row " << r << ':';
    for (int i = 1; i < r; ++i) out << ' ' << lab.z[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
    out << '\n';
  }
  out << "weight: " << w.to_string(rate_names(n - 1)) << '\n';
  return kExitOk;
}

int cmd_chain(const std::string& process, const std::string& m, const std::string& format,
              const std::string& solve, std::ostream& out) {
  const Composition c = Composition::parse(m);
  const AnyChain any = build_chain(parse_process(process), c);
  if (!solve.empty()) {
    std::visit(
        [&](const auto& g) {
          const auto point = parse_point(solve, g.nvars);
          const auto w = stationary_solve(g.view(), point);
          for (std::size_t i = 0; i < w.size(); ++i) {
            out << (i ? " " : "") << state_label(g.states[i]) << ':' << to_string(w[i]);
          }
          out << '\n';
        },
        any);
    return kExitOk;
  }
  if (format == "dot") {
    std::visit([&](const auto& g) { out << to_dot(g); }, any);
  } else if (format == "json") {
    std::visit([&](const auto& g) { out << to_json(g) << '\n'; }, any);
  } else {
    print_transitions(any, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& o, std::ostream& out) {
  bool ok = true;
  run_suite(suite, o, [&](const Report& r) {
    ok = ok && r.ok;
    out << r.to_json().dump() << std::endl;
  });
  return ok ? kExitOk : kExitCheckFailed;
}

struct SimulateArgs {
  std::string process;
  std::string m;
  std::string rates;
  std::uint64_t events = 1000000;
  std::uint64_t seed = 1;
  double burn_in = 0.1;
  double tolerance = 0.01;
  bool compare = false;
  bool project = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const Composition c = Composition::parse(a.m);
  const AnyChain any = build_chain(parse_process(a.process), c);
  return std::visit(
      [&](const auto& g) -> int {
        SimConfig cfg;
        cfg.rates = a.rates.empty()
                        ? std::vector<BigRational>(static_cast<std::size_t>(g.nvars), BigRational(1))
                        : parse_point(a.rates, g.nvars);
        cfg.seed = a.seed;
        cfg.events = a.events;
        cfg.burn_in = a.burn_in;
        const Partition* partition = nullptr;
        if (a.project) {
          if (!g.partition) throw ValidationError("--project needs a queue process");
          partition = &*g.partition;
        }
        const EmpiricalDistribution e = gillespie_run(g.view(), cfg, partition);

        std::vector<std::string> labels = labels_of(g);
        std::vector<double> fractions = e.fractions;
        if (partition) {
          labels.clear();
          for (const Word& w : enumerate_words(c)) labels.push_back(w.label());
          fractions = e.projected;
        }
        if (!a.compare) {
          out << simulation_csv(labels, fractions, nullptr);
          return kExitOk;
        }
        std::vector<BigRational> exact = stationary_solve(g.view(), cfg.rates);
        if (partition) exact = block_sums(exact, *partition);
        const Comparison cmp = compare_to_exact(fractions, exact, a.tolerance, e.events);
        out << simulation_csv(labels, fractions, &cmp);
        char buf[160];
        std::snprintf(buf, sizeof buf, "tv=%.6f tolerance=%.4f events=%llu time=%.3f %s\n", cmp.tv,
                      a.tolerance, static_cast<unsigned long long>(e.events), e.total_time,
                      cmp.passed ? "pass" : "fail");
        err << buf;
        return cmp.passed ? kExitOk : kExitCheckFailed;
      },
      any);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multispecies TASEP, multiline queues and coupe chains", "mtasep"};
  app.require_subcommand(1);

  const std::vector<std::string> processes{"tasep", "fm", "fm3", "fm1", "coupe"};

  std::string kind, m, format = "text";
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List words or multiline queues");
  enumerate->add_option("kind", kind, "words or mlqs")->required()->check(CLI::IsMember({"words", "mlqs"}));
  enumerate->add_option("-m,--composition", m, "species counts, e.g. 1,1,2")->required();
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  enumerate->add_flag("--count-only", count_only, "print only the number of items");

  std::string file, project_format = "text";
  auto* project = app.add_subcommand("project", "Bully projection of a queue read from a file or stdin");
  project->add_option("file", file, "queue text; '-' or omitted for stdin");
  project->add_option("--format", project_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string process, chain_m, export_format, solve;
  auto* chain = app.add_subcommand("chain", "Build a chain, export it or solve it");
  chain->add_option("process", process, "tasep, fm, fm3, fm1 or coupe")->required()->check(CLI::IsMember(processes));
  chain->add_option("-m,--composition", chain_m, "species counts")->required();
  chain->add_option("--export", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  chain->add_option("--solve", solve, "rate point, e.g. x1=2,x2=1");

  std::string suite;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run verification suites, one JSON report per line");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-N", vopts.max_size, "largest ring size")->check(CLI::Range(2, 8));
  verify->add_option("--seed", vopts.seed, "seed for random rate points");
  verify->add_option("--points", vopts.points, "rate points per numeric check")->check(CLI::Range(1, 100));

  SimulateArgs sargs;
  auto* simulate = app.add_subcommand("simulate", "Gillespie simulation, CSV on stdout");
  simulate->add_option("process", sargs.process, "tasep, fm, fm3, fm1 or coupe")->required()->check(CLI::IsMember(processes));
  simulate->add_option("-m,--composition", sargs.m, "species counts")->required();
  simulate->add_option("--rates", sargs.rates, "rate values, e.g. 2,1");
  simulate->add_option("--events", sargs.events, "number of events")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sargs.seed, "random seed");
  simulate->add_option("--burn-in", sargs.burn_in, "fraction of events discarded")->check(CLI::Range(0.0, 0.99));
  simulate->add_option("--tolerance", sargs.tolerance, "total-variation bound for --compare-exact");
  simulate->add_flag("--compare-exact", sargs.compare, "compare against the exact stationary vector");
  simulate->add_flag("--project", sargs.project, "accumulate through the bully projection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(kind, m, format, count_only, out, err);
    if (*project) return cmd_project(file, project_format, in, out);
    if (*chain) return cmd_chain(process, chain_m, export_format, solve, out);
    if (*verify) return cmd_verify(suite, vopts, out);
    if (*simulate) return cmd_simulate(sargs, out, err);
  } catch (const ReducibleChainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const AbsorbingStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSimulation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mtasep
