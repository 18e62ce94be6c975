#include "mtasep/chain.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mtasep/coupe.hpp"

namespace mtasep {

using nlohmann::json;

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::TasepSwap: return "tasep-swap";
    case Mechanism::Ringing: return "ringing";
    case Mechanism::CoupeRegular: return "coupe-regular";
    case Mechanism::CoupePulling: return "coupe-pulling";
    case Mechanism::Lumped: return "lumped";
  }
  return "?";
}

Mechanism parse_mechanism(const std::string& text) {
  for (auto m : {Mechanism::TasepSwap, Mechanism::Ringing, Mechanism::CoupeRegular,
                 Mechanism::CoupePulling, Mechanism::Lumped}) {
    if (to_string(m) == text) return m;
  }
  throw ValidationError("unknown mechanism '" + text + "'");
}

std::vector<std::string> rate_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

TasepChain build_tasep_chain(const Composition& c) {
  TasepChain g;
  g.composition = c;
  g.nvars = c.species() - 1;
  g.states = enumerate_words(c);
  std::map<Word, std::size_t> index;
  for (std::size_t s = 0; s < g.states.size(); ++s) index.emplace(g.states[s], s);

  std::vector<LaurentPoly> rate;
  for (int b = 1; b <= g.nvars; ++b) rate.push_back(LaurentPoly::variable(g.nvars, b));

  const int ring = c.size();
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    const Word& w = g.states[s];
    for (int i = 0; i < ring; ++i) {
      const int left = (i + ring - 1) % ring;
      const int a = w.sites[static_cast<std::size_t>(left)];
      const int b = w.sites[static_cast<std::size_t>(i)];
      if (a <= b) continue;
      Word next = w;
      std::swap(next.sites[static_cast<std::size_t>(left)], next.sites[static_cast<std::size_t>(i)]);
      g.transitions.push_back({s, index.at(next), rate[static_cast<std::size_t>(b - 1)],
                               Mechanism::TasepSwap, i});
    }
  }
  return g;
}

QueueChain build_fm_chain(const Composition& c, RingingRule rule) {
  if (rule == RingingRule::ThreeSpecies && c.species() != 3) {
    throw ValidationError("the three-species rate rule needs n = 3, got n = " +
                          std::to_string(c.species()));
  }
  if (rule == RingingRule::OneFirstClass && c.count(1) != 1) {
    throw ValidationError("the one-first-class rate rule needs m_1 = 1, got m_1 = " +
                          std::to_string(c.count(1)));
  }
  QueueChain g;
  g.composition = c;
  g.nvars = rule == RingingRule::OneFirstClass ? 1 : (rule == RingingRule::ThreeSpecies ? 2 : c.species() - 1);
  g.states = enumerate_mlqs(c);
  std::unordered_map<MultilineQueue, std::size_t, MultilineQueueHash> index;
  index.reserve(g.states.size());
  for (std::size_t s = 0; s < g.states.size(); ++s) index.emplace(g.states[s], s);

  const LaurentPoly one = LaurentPoly::constant(g.nvars, 1);
  const LaurentPoly x1 = LaurentPoly::variable(g.nvars, 1);
  const LaurentPoly x2 = g.nvars >= 2 ? LaurentPoly::variable(g.nvars, 2) : one;

  Partition partition;
  partition.block_of.resize(g.states.size());
  const auto words = enumerate_words(c);
  partition.blocks = words.size();
  std::map<Word, std::size_t> word_index;
  for (std::size_t k = 0; k < words.size(); ++k) word_index.emplace(words[k], k);

  for (std::size_t s = 0; s < g.states.size(); ++s) {
    const MultilineQueue& q = g.states[s];
    const BullyLabeling labeling = bully_projection(q);
    partition.block_of[s] = word_index.at(labeling.word);
    for (int i = 0; i < c.size(); ++i) {
      MultilineQueue next = ringing_transition(q, i);
      if (next == q) continue;
      const int cls = labeling.word.sites[static_cast<std::size_t>(i)];
      const LaurentPoly* rate = &one;
      switch (rule) {
        case RingingRule::Uniform:
          break;
        case RingingRule::ThreeSpecies: {
          const bool covered = cls == 3 && labeling.cover_class[1][static_cast<std::size_t>(i)] != 0;
          rate = (cls == 1 || covered) ? &x1 : &x2;
          break;
        }
        case RingingRule::OneFirstClass:
          rate = cls == 1 ? &x1 : &one;
          break;
      }
      g.transitions.push_back({s, index.at(next), *rate, Mechanism::Ringing, i});
    }
  }
  g.partition = std::move(partition);
  return g;
}

Partition bully_partition(const QueueChain& g) {
  const auto words = enumerate_words(g.composition);
  std::map<Word, std::size_t> word_index;
  for (std::size_t k = 0; k < words.size(); ++k) word_index.emplace(words[k], k);
  Partition p;
  p.blocks = words.size();
  p.block_of.reserve(g.states.size());
  for (const auto& q : g.states) p.block_of.push_back(word_index.at(bully_projection(q).word));
  return p;
}

std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> aggregate_rates(GraphView g) {
  std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> out;
  for (const auto& t : g.transitions) {
    auto [it, inserted] = out.try_emplace({t.from, t.to}, t.rate);
    if (!inserted) it->second += t.rate;
  }
  return out;
}

std::vector<std::vector<LaurentPoly>> transition_matrix(GraphView g) {
  std::vector<std::vector<LaurentPoly>> m(g.states, std::vector<LaurentPoly>(g.states, LaurentPoly(g.nvars)));
  for (const auto& t : g.transitions) {
    m[t.to][t.from] += t.rate;
    m[t.from][t.from] -= t.rate;
  }
  return m;
}

Process parse_process(const std::string& text) {
  for (auto p : {Process::Tasep, Process::Fm, Process::Fm3, Process::Fm1, Process::Coupe}) {
    if (to_string(p) == text) return p;
  }
  throw ValidationError("unknown process '" + text + "' (expected tasep, fm, fm3, fm1 or coupe)");
}

std::string to_string(Process p) {
  switch (p) {
    case Process::Tasep: return "tasep";
    case Process::Fm: return "fm";
    case Process::Fm3: return "fm3";
    case Process::Fm1: return "fm1";
    case Process::Coupe: return "coupe";
  }
  return "?";
}

AnyChain build_chain(Process p, const Composition& c) {
  switch (p) {
    case Process::Tasep: return build_tasep_chain(c);
    case Process::Fm: return build_fm_chain(c, RingingRule::Uniform);
    case Process::Fm3: return build_fm_chain(c, RingingRule::ThreeSpecies);
    case Process::Fm1: return build_fm_chain(c, RingingRule::OneFirstClass);
    case Process::Coupe: return build_coupe_chain(c);
  }
  throw std::logic_error("unhandled process");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

template <class State, class LabelFn>
std::string dot_impl(const ChainGraph<State>& g, const std::string& name, LabelFn label) {
  const auto names = rate_names(g.nvars);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    out << "  n" << s << " [label=\"" << label(g.states[s]) << "\"];\n";
  }
  for (const auto& [edge, rate] : aggregate_rates(g.view())) {
    out << "  n" << edge.first << " -> n" << edge.second << " [label=\""
        << dot_escape(rate.to_string(names)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

template <class State, class LabelFn>
std::string json_impl(const ChainGraph<State>& g, const std::string& kind, LabelFn label) {
  const auto names = rate_names(g.nvars);
  json doc;
  doc["kind"] = kind;
  doc["composition"] = g.composition.counts();
  doc["nvars"] = g.nvars;
  json states = json::array();
  for (const auto& s : g.states) states.push_back(label(s));
  doc["states"] = std::move(states);
  json transitions = json::array();
  for (const auto& t : g.transitions) {
    transitions.push_back({{"from", t.from},
                           {"to", t.to},
                           {"rate", t.rate.to_string(names)},
                           {"mechanism", to_string(t.mechanism)},
                           {"site", t.site}});
  }
  doc["transitions"] = std::move(transitions);
  if (g.partition) doc["partition"] = g.partition->block_of;
  return doc.dump(2) + "\n";
}

template <class State>
void read_transitions(const json& doc, ChainGraph<State>& g) {
  const auto names = rate_names(g.nvars);
  for (const auto& t : doc.at("transitions")) {
    Transition rec;
    rec.from = t.at("from").get<std::size_t>();
    rec.to = t.at("to").get<std::size_t>();
    if (rec.from >= g.states.size() || rec.to >= g.states.size() || rec.from == rec.to) {
      throw ValidationError("transition endpoints out of range or equal");
    }
    rec.rate = LaurentPoly::parse(t.at("rate").get<std::string>(), g.nvars, names);
    rec.mechanism = parse_mechanism(t.at("mechanism").get<std::string>());
    rec.site = t.at("site").get<int>();
    g.transitions.push_back(std::move(rec));
  }
  if (doc.contains("partition")) {
    Partition p;
    p.block_of = doc.at("partition").get<std::vector<std::size_t>>();
    if (p.block_of.size() != g.states.size()) throw ValidationError("partition size mismatch");
    for (auto b : p.block_of) p.blocks = std::max(p.blocks, b + 1);
    g.partition = std::move(p);
  }
}

std::string queue_dot_label(const MultilineQueue& q) {
  std::string out;
  for (int r = 0; r < q.rows(); ++r) {
    for (int c = 0; c < q.columns(); ++c) out.push_back(q.occupied(r, c) ? '1' : '0');
    out += "\\n";
  }
  return out + bully_projection(q).word.label();
}

}  // namespace

std::string to_dot(const TasepChain& g) {
  return dot_impl(g, "tasep", [](const Word& w) { return w.label(); });
}

std::string to_dot(const QueueChain& g) { return dot_impl(g, "mlq", queue_dot_label); }

std::string to_json(const TasepChain& g) {
  return json_impl(g, "words", [](const Word& w) { return w.to_string(); });
}

std::string to_json(const QueueChain& g) {
  return json_impl(g, "mlqs", [](const MultilineQueue& q) { return q.label(); });
}

AnyChain chain_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    const auto counts = doc.at("composition").get<std::vector<int>>();
    const Composition c = Composition::make(counts);
    const int nvars = doc.at("nvars").get<int>();
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "words") {
      TasepChain g;
      g.composition = c;
      g.nvars = nvars;
      for (const auto& s : doc.at("states")) {
        Word w = parse_word(s.get<std::string>());
        if (!has_content(w, c)) throw ValidationError("state " + w.to_string() + " has the wrong content");
        g.states.push_back(std::move(w));
      }
      read_transitions(doc, g);
      return g;
    }
    if (kind == "mlqs") {
      QueueChain g;
      g.composition = c;
      g.nvars = nvars;
      for (const auto& s : doc.at("states")) {
        std::string text_rows = s.get<std::string>();
        for (auto& ch : text_rows) {
          if (ch == '/') ch = '\n';
        }
        MultilineQueue q = MultilineQueue::parse(text_rows);
        if (!(q.composition() == c)) throw ValidationError("state " + q.label() + " has the wrong row sums");
        g.states.push_back(std::move(q));
      }
      read_transitions(doc, g);
      return g;
    }
    throw ValidationError("unknown chain kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed chain JSON: ") + e.what());
  }
}

}  // namespace mtasep
