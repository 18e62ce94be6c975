#include "mtasep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mtasep/bully.hpp"
#include "mtasep/chain.hpp"
#include "mtasep/coupe.hpp"
#include "mtasep/solve.hpp"

namespace mtasep {

using nlohmann::json;

std::string Report::status() const {
  if (theorem) return ok ? "pass" : "fail";
  return ok ? "agree" : "disagree";
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["composition"] = subject;
  j["status"] = status();
  j["elapsed"] = elapsed;
  if (counterexample) j["counterexample"] = *counterexample;
  j["details"] = details;
  return j;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start(const std::string& suite, const std::string& subject, bool theorem) {
  Report r;
  r.suite = suite;
  r.subject = subject;
  r.theorem = theorem;
  return r;
}

Report& fail(Report& r, std::string what) {
  if (r.ok) r.counterexample = std::move(what);
  r.ok = false;
  return r;
}

std::string point_text(const std::vector<BigRational>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += "x" + std::to_string(i + 1) + "=" + to_string(p[i]);
  }
  return out;
}

json poly_list(const std::vector<LaurentPoly>& v, int nvars) {
  json out = json::array();
  for (const LaurentPoly& p : v) out.push_back(p.to_string(rate_names(nvars)));
  return out;
}

template <class Chain>
std::optional<std::string> residual_failure(const Chain& g, const std::vector<LaurentPoly>& w) {
  const auto residual = master_residual(g.view(), w);
  if (auto bad = first_nonzero(residual)) {
    return "state " + state_label(g.states[*bad]) + ": residual " +
           residual[*bad].to_string(rate_names(g.nvars));
  }
  return std::nullopt;
}

template <class Chain>
std::optional<std::string> lump_failure(const Chain& g, const Partition& p,
                                        const std::vector<Word>& words) {
  const auto report = check_lumpability(g.view(), p);
  if (report) return std::nullopt;
  const auto& ce = *report.counterexample;
  return "states " + state_label(g.states[ce.first]) + " and " + state_label(g.states[ce.second]) +
         " differ in rate into " + words[ce.target_block].label() + ": " +
         ce.first_rate.to_string(rate_names(g.nvars)) + " vs " +
         ce.second_rate.to_string(rate_names(g.nvars));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Block sums stationary for the TASEP chain, symbolically or at rate points.
std::optional<std::string> sums_failure(const TasepChain& t, const std::vector<LaurentPoly>& sums,
                                        bool symbolic, const VerifyOptions& o, json& details) {
  if (symbolic) {
    details["tasep_check"] = "symbolic";
    if (auto bad = residual_failure(t, sums)) return "block sums on the TASEP chain, " + *bad;
    return std::nullopt;
  }
  details["tasep_check"] = std::to_string(o.points) + " rate points";
  for (int k = 0; k < o.points; ++k) {
    const auto point = random_rate_point(t.nvars, o.seed, static_cast<std::uint64_t>(k));
    const auto exact = stationary_solve(t.view(), point);
    if (!proportional(exact, evaluate_all(sums, point))) {
      return "block sums not proportional to the TASEP solution at " + point_text(point);
    }
  }
  return std::nullopt;
}

std::vector<LaurentPoly> aggregated_conjecture(const Composition& c, const std::vector<Word>& words) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  std::vector<LaurentPoly> agg(words.size(), LaurentPoly(c.species() - 1));
  for (const MultilineQueue& q : enumerate_mlqs(c)) {
    const BullyLabeling lab = bully_projection(q);
    agg[index.at(lab.word)] += conjectured_weight(c, lab);
  }
  return agg;
}

Composition all_ones(int n) { return Composition::make(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

Report check_fm3_theorem(const Composition& c, const VerifyOptions& o) {
  Stopwatch clock;
  Report r = start("fm3", c.to_string(), true);
  if (c.species() != 3) throw std::invalid_argument("fm3 suite needs three species");
  const QueueChain g = build_fm_chain(c, RingingRule::ThreeSpecies);
  const TasepChain t = build_tasep_chain(c);
  const std::vector<Word> words = enumerate_words(c);
  std::vector<LaurentPoly> w;
  w.reserve(g.size());
  bool formulas_agree = true;
  for (const MultilineQueue& q : g.states) {
    const BullyLabeling lab = bully_projection(q);
    w.push_back(fm3_weight(c, lab));
    if (formulas_agree && conjectured_weight(c, lab) != w.back()) {
      formulas_agree = false;
      fail(r, "queue " + q.label() + ": general weight " +
                  conjectured_weight(c, lab).to_string(rate_names(2)) + " vs " +
                  w.back().to_string(rate_names(2)));
    }
  }
  r.details["states"] = g.size();
  r.details["transitions"] = g.transitions.size();
  r.details["conjectured_weight_agrees"] = formulas_agree;

  if (auto bad = residual_failure(g, w)) fail(r, *bad);
  if (auto bad = lump_failure(g, *g.partition, words)) {
    fail(r, *bad);
  } else {
    const BlockChain lumped = lump(g.view(), *g.partition);
    if (!same_graph(lumped.view(), t.view(), identity_map(t.size()))) {
      fail(r, "lumped chain differs from the TASEP chain");
    }
  }
  const auto sums = block_sums(w, *g.partition);
  if (auto bad = sums_failure(t, sums, c.size() <= o.symbolic_size, o, r.details)) fail(r, *bad);
  if (sums.size() <= 12) r.details["block_sums"] = poly_list(sums, 2);
  r.elapsed = clock.seconds();
  return r;
}

Report check_fm1_theorem(const Composition& c, const VerifyOptions& o) {
  Stopwatch clock;
  Report r = start("fm1", c.to_string(), true);
  if (c.count(1) != 1 || c.species() < 3) {
    throw std::invalid_argument("fm1 suite needs one first-class particle and n >= 3");
  }
  const QueueChain g = build_fm_chain(c, RingingRule::OneFirstClass);
  std::vector<LaurentPoly> w;
  w.reserve(g.size());
  std::vector<int> z1;
  for (const MultilineQueue& q : g.states) {
    const BullyLabeling lab = bully_projection(q);
    w.push_back(fm1_weight(c, lab));
    z1.push_back(lab.first_class_cover());
  }
  r.details["states"] = g.size();
  r.details["transitions"] = g.transitions.size();
  r.details["exponent"] = "V1 - z1";
  if (auto bad = residual_failure(g, w)) {
    fail(r, *bad);
    std::vector<LaurentPoly> alt;
    for (std::size_t s = 0; s < g.size(); ++s) {
      const int e[1] = {c.vacancies(1) - z1[s]};
      alt.push_back(LaurentPoly::monomial(1, e));
    }
    r.details["alternative_v1_stationary"] = !residual_failure(g, alt).has_value();
  }
  if (g.size() <= o.solve_limit) {
    json checked = json::array();
    for (const BigRational& x : {BigRational(2), BigRational(3), BigRational(5, 2)}) {
      const std::vector<BigRational> point{x};
      if (!proportional(stationary_solve(g.view(), point), evaluate_all(w, point))) {
        fail(r, "exact solve disagrees at x1=" + to_string(x));
      }
      checked.push_back(to_string(x));
    }
    r.details["solved_at"] = checked;
  }
  r.elapsed = clock.seconds();
  return r;
}

Report check_partition_function(const Composition& c, const VerifyOptions&) {
  Stopwatch clock;
  Report r = start("zpart", c.to_string(), true);
  if (c.count(1) != 1 || c.species() < 3) {
    throw std::invalid_argument("zpart suite needs one first-class particle and n >= 3");
  }
  LaurentPoly z(1);
  for (const MultilineQueue& q : enumerate_mlqs(c)) z += fm1_weight(c, bully_projection(q));

  const int n = c.species();
  const int N = c.size();
  LaurentPoly explicit_form = LaurentPoly::constant(1, N);
  LaurentPoly h_form = LaurentPoly::constant(1, N);
  for (int row = 2; row <= n - 1; ++row) {
    const int m = c.prefix(row);
    LaurentPoly factor(1);
    for (int i = 0; i <= N - m; ++i) {
      const int e[1] = {i};
      factor += LaurentPoly::monomial(1, e, binomial(m + i - 1, m - 1));
    }
    explicit_form *= factor;
    h_form *= complete_homogeneous_one_a(n - row, row);
  }
  const std::vector<std::string> names{"a"};
  r.details["sum"] = z.to_string(names);
  r.details["explicit"] = explicit_form.to_string(names);
  r.details["h_form"] = h_form.to_string(names);
  r.details["h_form_matches"] = h_form == z;
  if (z != explicit_form) {
    fail(r, "sum " + z.to_string(names) + " vs formula " + explicit_form.to_string(names));
  }
  r.elapsed = clock.seconds();
  return r;
}

Report check_main_conjecture(const Composition& c, const VerifyOptions& o) {
  Stopwatch clock;
  Report r = start("main", c.to_string(), false);
  const TasepChain t = build_tasep_chain(c);
  const auto agg = aggregated_conjecture(c, t.states);
  r.details["words"] = t.size();
  if (c.size() <= o.symbolic_size) {
    r.details["symbolic"] = true;
    if (auto bad = residual_failure(t, agg)) fail(r, "aggregated weights, " + *bad);
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < t.size(); ++i) index.emplace(t.states[i], i);
  for (int k = 0; k < o.points; ++k) {
    const auto point = random_rate_point(t.nvars, o.seed, static_cast<std::uint64_t>(k));
    const auto exact = stationary_solve(t.view(), point);
    if (!proportional(exact, evaluate_all(agg, point))) {
      fail(r, "aggregated weights not proportional to the TASEP solution at " + point_text(point));
    }
    if (k == 0) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (exact[index.at(t.states[i].rotated(1))] != exact[i]) {
          fail(r, "solution not rotation invariant at " + t.states[i].label());
          break;
        }
      }
    }
  }
  r.details["points"] = o.points;
  if (t.size() <= 6) r.details["aggregated"] = poly_list(agg, t.nvars);
  r.elapsed = clock.seconds();
  return r;
}

Report check_lw_normalization_and_positivity(int n, const VerifyOptions&) {
  Stopwatch clock;
  const Composition c = all_ones(n);
  Report r = start("lw", c.to_string(), false);
  const TasepChain t = build_tasep_chain(c);
  const int nvars = t.nvars;
  const auto agg = aggregated_conjecture(c, t.states);
  if (auto bad = residual_failure(t, agg)) {
    fail(r, "aggregated weights not stationary, " + *bad);
    r.elapsed = clock.seconds();
    return r;
  }
  std::vector<int> target_exps;
  for (int i = 1; i <= nvars; ++i) target_exps.push_back(static_cast<int>(binomial(n - i, 2)));
  const LaurentPoly target = LaurentPoly::monomial(nvars, target_exps);
  const LaurentPoly& top = agg.back();
  r.details["w0"] = t.states.back().label();
  r.details["target"] = target.to_string(rate_names(nvars));
  if (!top.is_monomial()) {
    fail(r, "weight of " + t.states.back().label() + " is not a monomial: " +
                top.to_string(rate_names(nvars)));
  } else {
    const LaurentPoly factor = target.divided_by(top);
    std::vector<LaurentPoly> normalized;
    for (const LaurentPoly& p : agg) normalized.push_back(p * factor);
    std::size_t positive = 0;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
      if (positivity_check(normalized[i])) {
        ++positive;
      } else {
        fail(r, "normalized weight of " + t.states[i].label() + " is " +
                    normalized[i].to_string(rate_names(nvars)));
      }
    }
    r.details["positive"] = positive;
    r.details["factor"] = factor.to_string(rate_names(nvars));
    if (normalized.size() <= 6) r.details["normalized"] = poly_list(normalized, nvars);
    const std::vector<BigRational> ones(static_cast<std::size_t>(nvars), BigRational(1));
    const auto solved = stationary_solve(t.view(), ones);
    const auto at_ones = evaluate_all(normalized, ones);
    if (!proportional(solved, at_ones)) fail(r, "all-ones solve disagrees with normalized weights");
    BigRational total = 0;
    for (const auto& v : at_ones) total += v;
    r.details["sum_at_ones"] = to_string(total);
  }
  r.elapsed = clock.seconds();
  return r;
}

Report check_identity_count(int n, const VerifyOptions&) {
  Stopwatch clock;
  const Composition c = all_ones(n);
  Report r = start("identity", c.to_string(), false);
  Word identity;
  for (int i = 1; i <= n; ++i) identity.sites.push_back(i);
  std::size_t count = 0;
  for (const MultilineQueue& q : enumerate_mlqs(c)) {
    if (bully_projection(q).word == identity) ++count;
  }
  BigInt formula = 1;
  for (int i = 1; i <= n - 1; ++i) formula *= binomial(n - 1, i);
  r.details["count"] = count;
  r.details["formula"] = formula.convert_to<std::size_t>();
  if (BigInt(count) != formula) {
    fail(r, "enumerated " + std::to_string(count) + " vs formula " + formula.str());
  }
  r.elapsed = clock.seconds();
  return r;
}

Report check_uniform_stationarity(const Composition& c, const VerifyOptions& o) {
  Stopwatch clock;
  Report r = start("uniform", c.to_string(), true);
  const QueueChain g = build_fm_chain(c, RingingRule::Uniform);
  r.details["states"] = g.size();
  r.details["transitions"] = g.transitions.size();
  if (!irreducible(g.view())) fail(r, "ringing chain is not strongly connected");
  std::vector<std::size_t> in(g.size(), 0), out(g.size(), 0);
  for (const Transition& e : g.transitions) {
    ++out[e.from];
    ++in[e.to];
  }
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (out[s] == 0 || in[s] != out[s]) {
      fail(r, "state " + g.states[s].label() + ": in-degree " + std::to_string(in[s]) +
                  ", out-degree " + std::to_string(out[s]));
      break;
    }
  }
  const std::size_t exact_limit = std::max<std::size_t>(o.solve_limit, 3000);
  if (g.size() <= exact_limit) {
    r.details["method"] = "exact solve";
    const std::vector<BigRational> ones(static_cast<std::size_t>(g.nvars), BigRational(1));
    const auto solved = stationary_solve(g.view(), ones);
    for (std::size_t s = 0; s < solved.size(); ++s) {
      if (solved[s] != 1) {
        fail(r, "solution not uniform at " + g.states[s].label());
        break;
      }
    }
  } else {
    r.details["method"] = "degree balance";
  }
  r.elapsed = clock.seconds();
  return r;
}

Report check_coupe_theorem(const Composition& c, const VerifyOptions& o) {
  Stopwatch clock;
  Report r = start("coupe", c.to_string(), true);
  const QueueChain g = build_coupe_chain(c);
  const TasepChain t = build_tasep_chain(c);
  const std::vector<Word> words = enumerate_words(c);
  r.details["states"] = g.size();
  r.details["transitions"] = g.transitions.size();

  std::vector<LaurentPoly> w;
  std::vector<CoupeCounts> counts;
  for (const MultilineQueue& q : g.states) {
    const BullyLabeling lab = bully_projection(q);
    w.push_back(fm3_weight(c, lab));
    counts.push_back(coupe_counts(q, decompose_coupes(lab.word)));
  }
  if (auto bad = residual_failure(g, w)) fail(r, *bad);
  if (auto bad = lump_failure(g, *g.partition, words)) {
    fail(r, *bad);
  } else {
    const BlockChain lumped = lump(g.view(), *g.partition);
    if (!same_graph(lumped.view(), t.view(), identity_map(t.size()))) {
      fail(r, "lumped chain differs from the TASEP chain");
    }
  }
  if (!irreducible(g.view())) fail(r, "coupe chain is not irreducible");

  std::vector<int> out(g.size(), 0), in_regular(g.size(), 0), in_pulling(g.size(), 0);
  for (const Transition& e : g.transitions) {
    if (g.partition->block_of[e.from] == g.partition->block_of[e.to]) {
      fail(r, "edge " + g.states[e.from].label() + " -> " + g.states[e.to].label() +
                  " keeps the projected word");
    }
    ++out[e.from];
    if (e.mechanism == Mechanism::CoupeRegular) ++in_regular[e.to];
    if (e.mechanism == Mechanism::CoupePulling) ++in_pulling[e.to];
  }
  for (std::size_t s = 0; s < g.size(); ++s) {
    const CoupeCounts& k = counts[s];
    std::ostringstream why;
    if (out[s] != k.expected_outgoing()) {
      why << "outgoing " << out[s] << " vs c1+e2=" << k.expected_outgoing();
    } else if (in_regular[s] != k.expected_incoming_regular()) {
      why << "regular incoming " << in_regular[s] << " vs o1=" << k.expected_incoming_regular();
    } else if (in_pulling[s] != k.expected_incoming_pulling()) {
      why << "pulling incoming " << in_pulling[s]
          << " vs v1+v2-f2=" << k.expected_incoming_pulling();
    }
    if (!why.str().empty()) {
      fail(r, "state " + g.states[s].label() + ": " + why.str());
      break;
    }
  }
  (void)o;
  r.elapsed = clock.seconds();
  return r;
}

Report check_three_species_lemma(const Composition& c, const VerifyOptions&) {
  Stopwatch clock;
  Report r = start("lemma", c.to_string(), true);
  if (c.species() != 3) throw std::invalid_argument("lemma suite needs three species");
  const int ring = c.size();
  std::size_t queues = 0;
  for (const MultilineQueue& q : enumerate_mlqs(c)) {
    ++queues;
    const BullyLabeling lab = bully_projection(q);
    const Word& w = lab.word;
    const int k = covered_three_count(lab);
    auto covered = [&](int i) { return lab.cover_class[1][static_cast<std::size_t>(q.wrap(i))] != 0; };
    std::vector<bool> effective(static_cast<std::size_t>(ring));
    for (int i = 0; i < ring; ++i) {
      const MultilineQueue next = ringing_transition(q, i);
      effective[static_cast<std::size_t>(i)] = next != q;
      if (w.at(i) == 2 && (q.occupied(0, i) || !q.occupied(1, i))) {
        fail(r, "part 1, queue " + q.label() + " site " + std::to_string(i + 1));
      }
      if (w.at(i) == 2 && w.at(i - 1) == 1 && next != q) {
        fail(r, "part 2, queue " + q.label() + " site " + std::to_string(i + 1));
      }
      if (next != q) {
        const int k2 = covered_three_count(bully_projection(next));
        const bool noncovered3 = w.at(i) == 3 && !covered(i);
        if ((k2 > k && !noncovered3) || (k2 < k && w.at(i) != 1)) {
          fail(r, "part 4, queue " + q.label() + " site " + std::to_string(i + 1));
        }
      }
    }
    for (int i = 0; i < ring; ++i) {
      if (w.at(i) != 3 || w.at(i - 1) == 3) continue;
      int hits = 0;
      for (int l = i; w.at(l) == 3 && l < i + ring; ++l) {
        if (!covered(l) && effective[static_cast<std::size_t>(q.wrap(l))]) ++hits;
      }
      if (hits > 1) fail(r, "part 3, queue " + q.label() + " block at site " + std::to_string(i + 1));
    }
  }
  r.details["queues"] = queues;
  r.elapsed = clock.seconds();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fm3",      "fm1",     "zpart", "main", "lw",
                                              "identity", "uniform", "coupe", "lemma"};
  return names;
}

void run_suite(const std::string& name, const VerifyOptions& o,
               const std::function<void(const Report&)>& sink) {
  if (name == "all") {
    for (const std::string& s : suite_names()) run_suite(s, o, sink);
    return;
  }
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ValidationError("unknown suite '" + name + "'");
  }
  if (name == "lw" || name == "identity") {
    for (int n = name == "lw" ? 3 : 2; n <= o.max_size; ++n) {
      sink(name == "lw" ? check_lw_normalization_and_positivity(n, o) : check_identity_count(n, o));
    }
    return;
  }
  for (const Composition& c : compositions_up_to(o.max_size)) {
    const int n = c.species();
    const bool single_first = c.count(1) == 1 && n >= 3;
    if (name == "fm3" && n == 3) sink(check_fm3_theorem(c, o));
    if (name == "fm1" && single_first) sink(check_fm1_theorem(c, o));
    if (name == "zpart" && single_first) sink(check_partition_function(c, o));
    if (name == "main") sink(check_main_conjecture(c, o));
    if (name == "uniform") sink(check_uniform_stationarity(c, o));
    if (name == "coupe" && n == 3) sink(check_coupe_theorem(c, o));
    if (name == "lemma" && n == 3) sink(check_three_species_lemma(c, o));
  }
}

}  // namespace mtasep
