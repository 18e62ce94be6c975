#include "mtasep/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mtasep/rng.hpp"

namespace mtasep {

EmpiricalDistribution gillespie_run(GraphView g, const SimConfig& cfg, const Partition* project) {
  if (cfg.rates.size() != static_cast<std::size_t>(g.nvars)) {
    throw std::invalid_argument("expected " + std::to_string(g.nvars) + " rates, got " +
                                std::to_string(cfg.rates.size()));
  }
  for (const BigRational& r : cfg.rates) {
    if (r <= 0) throw std::invalid_argument("rates must be positive");
  }
  if (cfg.events == 0) throw std::invalid_argument("event count must be positive");
  if (cfg.burn_in < 0.0 || cfg.burn_in >= 1.0) throw std::invalid_argument("burn-in must lie in [0, 1)");
  if (cfg.start >= g.states) throw std::invalid_argument("start state out of range");
  if (project && project->block_of.size() != g.states) {
    throw std::invalid_argument("projection does not cover every state");
  }

  std::vector<std::size_t> offset(g.states + 1, 0);
  for (const Transition& t : g.transitions) ++offset[t.from + 1];
  for (std::size_t s = 0; s < g.states; ++s) offset[s + 1] += offset[s];
  std::vector<std::size_t> target(g.transitions.size());
  std::vector<double> cumulative(g.transitions.size());
  {
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    std::vector<double> rate(g.transitions.size());
    for (const Transition& t : g.transitions) {
      const std::size_t k = fill[t.from]++;
      target[k] = t.to;
      rate[k] = t.rate.evaluate(cfg.rates).convert_to<double>();
    }
    for (std::size_t s = 0; s < g.states; ++s) {
      double acc = 0.0;
      for (std::size_t k = offset[s]; k < offset[s + 1]; ++k) {
        acc += rate[k];
        cumulative[k] = acc;
      }
    }
  }

  CounterRng rng(cfg.seed);
  const auto burn = static_cast<std::uint64_t>(cfg.burn_in * static_cast<double>(cfg.events));
  std::vector<double> occupation(g.states, 0.0);
  std::vector<double> projected(project ? project->blocks : 0, 0.0);
  EmpiricalDistribution out;
  std::size_t s = cfg.start;
  for (std::uint64_t e = 0; e < cfg.events; ++e) {
    const std::size_t lo = offset[s], hi = offset[s + 1];
    if (lo == hi) throw AbsorbingStateError(s);
    const double total = cumulative[hi - 1];
    const double hold = rng.exponential(total);
    const double pick = rng.uniform() * total;
    auto it = std::lower_bound(cumulative.begin() + static_cast<std::ptrdiff_t>(lo),
                               cumulative.begin() + static_cast<std::ptrdiff_t>(hi), pick);
    if (it == cumulative.begin() + static_cast<std::ptrdiff_t>(hi)) --it;
    if (e >= burn) {
      occupation[s] += hold;
      if (project) projected[project->block_of[s]] += hold;
      out.total_time += hold;
      ++out.events;
    }
    s = target[static_cast<std::size_t>(it - cumulative.begin())];
  }
  out.fractions.resize(g.states);
  for (std::size_t i = 0; i < g.states; ++i) out.fractions[i] = occupation[i] / out.total_time;
  for (double& p : projected) p /= out.total_time;
  out.projected = std::move(projected);
  return out;
}

Comparison compare_to_exact(std::span<const double> fractions, std::span<const BigRational> exact,
                            double tolerance, std::uint64_t events) {
  if (fractions.size() != exact.size()) {
    throw std::invalid_argument("compare_to_exact: dimension mismatch (" +
                                std::to_string(fractions.size()) + " vs " +
                                std::to_string(exact.size()) + ")");
  }
  BigRational total = 0;
  for (const BigRational& v : exact) total += v;
  if (total <= 0) throw std::invalid_argument("compare_to_exact: target has no mass");
  Comparison c;
  double tv = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double p = BigRational(exact[i] / total).convert_to<double>();
    c.exact.push_back(p);
    tv += std::abs(fractions[i] - p);
    const double var = p * (1.0 - p) / static_cast<double>(std::max<std::uint64_t>(events, 1));
    c.z.push_back(var > 0.0 ? (fractions[i] - p) / std::sqrt(var) : 0.0);
  }
  c.tv = tv / 2.0;
  c.passed = c.tv <= tolerance;
  return c;
}

std::string simulation_csv(const std::vector<std::string>& labels, std::span<const double> fractions,
                           const Comparison* comparison) {
  std::ostringstream out;
  out << "state,fraction,exact,z\n";
  char buf[64];
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    out << labels.at(i) << ',';
    std::snprintf(buf, sizeof buf, "%.6f", fractions[i]);
    out << buf << ',';
    if (comparison) {
      std::snprintf(buf, sizeof buf, "%.6f,%.3f", comparison->exact[i], comparison->z[i]);
      out << buf;
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mtasep
