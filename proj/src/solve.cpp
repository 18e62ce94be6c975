#include "mtasep/solve.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "mtasep/bareiss.hpp"
#include "mtasep/modular.hpp"

namespace mtasep {

ReducibleChainError::ReducibleChainError(std::size_t nullity)
    : std::runtime_error("stationary solve: nullspace has dimension " + std::to_string(nullity) +
                         ", expected 1"),
      nullity_(nullity) {}

std::vector<LaurentPoly> master_residual(GraphView g, std::span<const LaurentPoly> weights) {
  if (weights.size() != g.states) {
    throw std::invalid_argument("master_residual: weight count does not match state count");
  }
  std::vector<LaurentPoly> residual(g.states, LaurentPoly(g.nvars));
  for (const Transition& t : g.transitions) {
    LaurentPoly flow = t.rate * weights[t.from];
    residual[t.to] += flow;
    residual[t.from] -= flow;
  }
  std::vector<int> low(static_cast<std::size_t>(g.nvars), 0);
  for (const LaurentPoly& r : residual) {
    for (const auto& term : r.terms()) {
      for (std::size_t v = 0; v < low.size(); ++v) low[v] = std::min(low[v], term.exps[v]);
    }
  }
  if (std::any_of(low.begin(), low.end(), [](int e) { return e < 0; })) {
    for (int& e : low) e = -e;
    const LaurentPoly shift = LaurentPoly::monomial(g.nvars, low);
    for (LaurentPoly& r : residual) r *= shift;
  }
  return residual;
}

std::optional<std::size_t> first_nonzero(const std::vector<LaurentPoly>& residual) {
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (!residual[i].is_zero()) return i;
  }
  return std::nullopt;
}

namespace {

// Generator with columns summing to zero, scaled to integers.
std::vector<SparseEntry> integral_generator(GraphView g, std::span<const BigRational> point) {
  if (point.size() != static_cast<std::size_t>(g.nvars)) {
    throw std::invalid_argument("rate point has " + std::to_string(point.size()) +
                                " coordinates, chain has " + std::to_string(g.nvars) +
                                " variables");
  }
  for (const BigRational& x : point) {
    if (x <= 0) throw std::invalid_argument("rate point coordinates must be positive");
  }
  std::map<std::pair<std::size_t, std::size_t>, BigRational> cells;
  for (const Transition& t : g.transitions) {
    BigRational r = t.rate.evaluate(point);
    cells[{t.to, t.from}] += r;
    cells[{t.from, t.from}] -= r;
  }
  BigInt lcd = 1;
  for (const auto& [key, v] : cells) lcd = boost::multiprecision::lcm(lcd, denominator(v));
  std::vector<SparseEntry> out;
  out.reserve(cells.size());
  for (const auto& [key, v] : cells) {
    if (v == 0) continue;
    BigInt scaled = numerator(v) * (lcd / denominator(v));
    out.push_back({key.first, key.second, std::move(scaled)});
  }
  return out;
}

std::vector<BigRational> bareiss_kernel(std::size_t n, const std::vector<SparseEntry>& entries) {
  using Matrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
  const auto size = static_cast<Eigen::Index>(n);
  Matrix a = Matrix::Constant(size, size, BigInt(0));
  for (const SparseEntry& e : entries) {
    a(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
  }
  FractionFreeEchelon<BigInt> ech = fraction_free_echelon<BigInt>(std::move(a));
  if (ech.rank != size - 1) throw ReducibleChainError(n - static_cast<std::size_t>(ech.rank));

  const Eigen::Index r = ech.rank;
  std::vector<BigRational> y(n);
  y[static_cast<std::size_t>(r)] = 1;
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    BigRational acc = 0;
    for (Eigen::Index j = i + 1; j <= r; ++j) {
      const BigInt& u = ech.reduced(i, j);
      if (u != 0) acc += BigRational(u) * y[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = -acc / BigRational(ech.reduced(i, i));
  }
  std::vector<BigRational> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(ech.column_order[k])] = y[k];
  }
  return x;
}

}  // namespace

std::vector<BigRational> normalize_integral(std::vector<BigRational> v) {
  BigInt lcd = 1;
  for (const BigRational& x : v) lcd = boost::multiprecision::lcm(lcd, denominator(x));
  BigInt g = 0;
  for (BigRational& x : v) {
    x *= lcd;
    g = boost::multiprecision::gcd(g, numerator(x));
  }
  if (g == 0) return v;
  bool negative = std::any_of(v.begin(), v.end(), [](const BigRational& x) { return x < 0; });
  if (negative) g = -g;
  for (BigRational& x : v) x /= g;
  return v;
}

std::vector<BigRational> stationary_solve(GraphView g, std::span<const BigRational> point,
                                          const SolveOptions& options) {
  if (g.states == 0) throw std::invalid_argument("stationary_solve: empty chain");
  if (g.states == 1) return {BigRational(1)};
  const std::vector<SparseEntry> entries = integral_generator(g, point);
  SolveMethod method = options.method;
  if (method == SolveMethod::Automatic) {
    method = g.states <= options.bareiss_limit ? SolveMethod::Bareiss : SolveMethod::Modular;
  }
  if (method == SolveMethod::Bareiss) return normalize_integral(bareiss_kernel(g.states, entries));

  ModularKernel k = modular_kernel(g.states, entries);
  if (k.vector.empty()) {
    if (k.nullity == 1) throw std::runtime_error("stationary_solve: modular lifting did not converge");
    throw ReducibleChainError(k.nullity);
  }
  std::vector<BigRational> out(k.vector.begin(), k.vector.end());
  return normalize_integral(std::move(out));
}

bool proportional(std::span<const BigRational> a, std::span<const BigRational> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (a[0] == 0 || b[0] == 0) return false;
  const BigRational ratio = a[0] / b[0];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != ratio * b[i]) return false;
  }
  return true;
}

std::vector<BigRational> evaluate_all(std::span<const LaurentPoly> weights,
                                      std::span<const BigRational> point) {
  std::vector<BigRational> out;
  out.reserve(weights.size());
  for (const LaurentPoly& w : weights) out.push_back(w.evaluate(point));
  return out;
}

namespace {

// Rates from each state into each foreign block.
std::vector<std::map<std::size_t, LaurentPoly>> block_rates(GraphView g, const Partition& p) {
  std::vector<std::map<std::size_t, LaurentPoly>> out(g.states);
  for (const Transition& t : g.transitions) {
    const std::size_t target = p.block_of[t.to];
    if (target == p.block_of[t.from]) continue;
    auto [it, inserted] = out[t.from].try_emplace(target, LaurentPoly(g.nvars));
    it->second += t.rate;
  }
  return out;
}

void check_partition(GraphView g, const Partition& p) {
  if (p.block_of.size() != g.states) {
    throw std::invalid_argument("partition does not cover every state");
  }
  for (std::size_t b : p.block_of) {
    if (b >= p.blocks) throw std::invalid_argument("partition block id out of range");
  }
}

}  // namespace

LumpabilityReport check_lumpability(GraphView g, const Partition& p) {
  check_partition(g, p);
  const auto rates = block_rates(g, p);
  std::vector<std::size_t> representative(p.blocks, g.states);
  for (std::size_t s = 0; s < g.states; ++s) {
    const std::size_t b = p.block_of[s];
    if (representative[b] == g.states) {
      representative[b] = s;
      continue;
    }
    const std::size_t r = representative[b];
    if (rates[s] == rates[r]) continue;
    LumpabilityReport report;
    report.lumpable = false;
    LumpabilityCounterexample ce;
    ce.first = r;
    ce.second = s;
    for (std::size_t target = 0; target < p.blocks; ++target) {
      auto a = rates[r].find(target);
      auto c = rates[s].find(target);
      LaurentPoly ra = a == rates[r].end() ? LaurentPoly(g.nvars) : a->second;
      LaurentPoly rc = c == rates[s].end() ? LaurentPoly(g.nvars) : c->second;
      if (ra != rc) {
        ce.target_block = target;
        ce.first_rate = ra;
        ce.second_rate = rc;
        break;
      }
    }
    report.counterexample = ce;
    return report;
  }
  return {};
}

BlockChain lump(GraphView g, const Partition& p) {
  if (!check_lumpability(g, p)) {
    throw std::invalid_argument("lump: partition is not lumpable");
  }
  const auto rates = block_rates(g, p);
  BlockChain out;
  out.nvars = g.nvars;
  out.states.resize(p.blocks);
  for (std::size_t b = 0; b < p.blocks; ++b) out.states[b] = b;
  std::vector<bool> seen(p.blocks, false);
  for (std::size_t s = 0; s < g.states; ++s) {
    const std::size_t b = p.block_of[s];
    if (seen[b]) continue;
    seen[b] = true;
    for (const auto& [target, rate] : rates[s]) {
      if (rate.is_zero()) continue;
      out.transitions.push_back({b, target, rate, Mechanism::Lumped, -1});
    }
  }
  std::sort(out.transitions.begin(), out.transitions.end(),
            [](const Transition& a, const Transition& b) {
              return std::pair(a.from, a.to) < std::pair(b.from, b.to);
            });
  return out;
}

bool irreducible(GraphView g) {
  if (g.states == 0) return false;
  std::vector<std::vector<std::size_t>> fwd(g.states), bwd(g.states);
  for (const Transition& t : g.transitions) {
    if (t.rate.is_zero()) continue;
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto reaches_all = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(g.states, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t s = stack.back();
      stack.pop_back();
      for (std::size_t t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          ++count;
          stack.push_back(t);
        }
      }
    }
    return count == g.states;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

std::vector<BigRational> block_sums(std::span<const BigRational> v, const Partition& p) {
  std::vector<BigRational> out(p.blocks);
  for (std::size_t s = 0; s < v.size(); ++s) out[p.block_of.at(s)] += v[s];
  return out;
}

std::vector<LaurentPoly> block_sums(std::span<const LaurentPoly> v, const Partition& p) {
  std::vector<LaurentPoly> out;
  const int nvars = v.empty() ? 0 : v.front().nvars();
  out.assign(p.blocks, LaurentPoly(nvars));
  for (std::size_t s = 0; s < v.size(); ++s) out[p.block_of.at(s)] += v[s];
  return out;
}

Partition singleton_partition(std::size_t states) {
  Partition p;
  p.blocks = states;
  p.block_of.resize(states);
  for (std::size_t i = 0; i < states; ++i) p.block_of[i] = i;
  return p;
}

bool same_graph(GraphView a, GraphView b, std::span<const std::size_t> relabel) {
  if (a.states != b.states || a.nvars != b.nvars || relabel.size() != a.states) return false;
  auto ra = aggregate_rates(a);
  auto rb = aggregate_rates(b);
  if (ra.size() != rb.size()) return false;
  for (const auto& [key, rate] : ra) {
    auto it = rb.find({relabel[key.first], relabel[key.second]});
    if (it == rb.end() || it->second != rate) return false;
  }
  return true;
}

}  // namespace mtasep
