#include "cclosure/dfa.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "cclosure/errors.hpp"

namespace cclosure {

Dfa::Dfa(std::string alphabet, std::size_t states, std::vector<State> table, State initial, std::vector<bool> finals)
    : alphabet_(std::move(alphabet)),
      states_(states),
      table_(std::move(table)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (states_ == 0) throw InvariantError("automaton without states");
  if (table_.size() != states_ * alphabet_.size() || finals_.size() != states_ || initial_ >= states_)
    throw InvariantError("malformed transition table");
  for (State t : table_)
    if (t >= states_) throw InvariantError("transition to a missing state");
}

std::size_t Dfa::letter_index(char c) const {
  auto p = alphabet_.find(c);
  if (p == std::string::npos) throw AlphabetError(std::string("letter '") + c + "' is not in the alphabet");
  return p;
}

bool accepts(const Dfa& d, std::string_view word) {
  Dfa::State s = d.initial();
  for (char c : word) s = d.next(s, d.letter_index(c));
  return d.is_final(s);
}

bool is_complete_deterministic(const Dfa& d) {
  if (d.initial() >= d.size()) return false;
  const std::size_t a = d.alphabet().size();
  if (d.table().size() != d.size() * a) return false;
  // Out-degree per (state, letter) counted from the edge list.
  std::vector<std::size_t> degree(d.size() * a, 0);
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t l = 0; l < a; ++l) {
      if (d.next(s, l) >= d.size()) return false;
      ++degree[s * a + l];
    }
  return std::all_of(degree.begin(), degree.end(), [](std::size_t n) { return n == 1; });
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetError("automata over different alphabets \"" + a.alphabet() + "\" and \"" + b.alphabet() + "\"");
}

// Explores tuples of component states breadth-first and numbers them in
// discovery order.
template <class Key, class Step, class Final>
Dfa explore(const std::string& alphabet, Key start, Step step, Final final_of) {
  std::map<Key, Dfa::State> index{{start, 0}};
  std::vector<Key> order{start};
  std::vector<Dfa::State> table;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      Key k = step(order[i], l);
      auto [it, fresh] = index.emplace(k, order.size());
      if (fresh) order.push_back(std::move(k));
      table.push_back(it->second);
    }
  }
  std::vector<bool> finals;
  for (const auto& k : order) finals.push_back(final_of(k));
  return Dfa(alphabet, order.size(), std::move(table), 0, std::move(finals));
}

Dfa product(const Dfa& a, const Dfa& b, bool want_both) {
  require_same_alphabet(a, b);
  using Key = std::pair<Dfa::State, Dfa::State>;
  return explore(
      a.alphabet(), Key{a.initial(), b.initial()},
      [&](const Key& k, std::size_t l) { return Key{a.next(k.first, l), b.next(k.second, l)}; },
      [&](const Key& k) {
        return want_both ? a.is_final(k.first) && b.is_final(k.second) : a.is_final(k.first) || b.is_final(k.second);
      });
}

}  // namespace

Dfa renumber(const Dfa& d) {
  return explore(
      d.alphabet(), d.initial(), [&](Dfa::State s, std::size_t l) { return d.next(s, l); },
      [&](Dfa::State s) { return d.is_final(s); });
}

Dfa counter(char letter, Int tail, Int period, const std::function<bool(Int)>& accept_state) {
  if (period < 1 || tail < 0) throw std::invalid_argument("counter needs tail >= 0 and period >= 1");
  const auto n = static_cast<std::size_t>(tail + period);
  std::vector<Dfa::State> table(n);
  std::vector<bool> finals(n);
  for (std::size_t s = 0; s < n; ++s) {
    table[s] = s + 1 < n ? s + 1 : static_cast<std::size_t>(tail);
    finals[s] = accept_state(static_cast<Int>(s));
  }
  return Dfa(std::string(1, letter), n, std::move(table), 0, std::move(finals));
}

Dfa shuffle_product(const std::vector<Dfa>& parts) {
  std::string alphabet;
  for (const auto& p : parts) alphabet += p.alphabet();
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
    throw AlphabetError("shuffle product needs pairwise disjoint alphabets");
  // Letter position -> (component, letter position inside it).
  std::vector<std::pair<std::size_t, std::size_t>> owner(alphabet.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t l = 0; l < parts[i].alphabet().size(); ++l)
      owner[alphabet.find(parts[i].alphabet()[l])] = {i, l};

  using Key = std::vector<Dfa::State>;
  Key start;
  for (const auto& p : parts) start.push_back(p.initial());
  return explore(
      alphabet, start,
      [&](Key k, std::size_t l) {
        auto [i, li] = owner[l];
        k[i] = parts[i].next(k[i], li);
        return k;
      },
      [&](const Key& k) {
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (!parts[i].is_final(k[i])) return false;
        return true;
      });
}

Dfa intersect(const Dfa& a, const Dfa& b) { return product(a, b, true); }

Dfa unite(const Dfa& a, const Dfa& b) { return product(a, b, false); }

Dfa complement(const Dfa& d) {
  std::vector<bool> finals = d.finals();
  finals.flip();
  return Dfa(d.alphabet(), d.size(), d.table(), d.initial(), std::move(finals));
}

Dfa empty_dfa(std::string alphabet) {
  std::vector<Dfa::State> table(alphabet.size(), 0);
  return Dfa(std::move(alphabet), 1, std::move(table), 0, {false});
}

Dfa minimize(const Dfa& input) {
  Dfa d = renumber(input);
  const std::size_t n = d.size(), a = d.alphabet().size();
  std::vector<std::size_t> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = d.is_final(s) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    // Signature: own block, then the blocks of the successors.
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (std::size_t l = 0; l < a; ++l) sig.push_back(block[d.next(s, l)]);
      next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  std::vector<Dfa::State> table(blocks * a);
  std::vector<bool> finals(blocks);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t l = 0; l < a; ++l) table[block[s] * a + l] = block[d.next(s, l)];
    finals[block[s]] = d.is_final(s);
  }
  return renumber(Dfa(d.alphabet(), blocks, std::move(table), block[d.initial()], std::move(finals)));
}

std::string export_dot(const Dfa& d) {
  std::string out = "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t s = 0; s < d.size(); ++s)
    out += "  q" + std::to_string(s) + " [shape=" + (d.is_final(s) ? "doublecircle" : "circle") + "];\n";
  out += "  start -> q" + std::to_string(d.initial()) + ";\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    // Merge letters that lead to the same target, targets in order of
    // their first letter.
    std::vector<std::pair<Dfa::State, std::string>> edges;
    for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
      Dfa::State t = d.next(s, l);
      auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == t; });
      if (it == edges.end())
        edges.emplace_back(t, std::string(1, d.alphabet()[l]));
      else
        it->second += std::string(",") + d.alphabet()[l];
    }
    for (const auto& [t, label] : edges)
      out += "  q" + std::to_string(s) + " -> q" + std::to_string(t) + " [label=\"" + label + "\"];\n";
  }
  return out + "}\n";
}

std::string export_json(const Dfa& d) {
  nlohmann::json j;
  j["alphabet"] = nlohmann::json::array();
  for (char c : d.alphabet()) j["alphabet"].push_back(std::string(1, c));
  j["states"] = d.size();
  j["initial"] = d.initial();
  j["finals"] = nlohmann::json::array();
  for (std::size_t s = 0; s < d.size(); ++s)
    if (d.is_final(s)) j["finals"].push_back(s);
  j["transitions"] = nlohmann::json::array();
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t l = 0; l < d.alphabet().size(); ++l)
      j["transitions"].push_back({{"from", s}, {"letter", std::string(1, d.alphabet()[l])}, {"to", d.next(s, l)}});
  return j.dump(2) + "\n";
}

std::set<std::string> shuffle_words(std::string_view u, std::string_view v) {
  if (u.empty()) return {std::string(v)};
  if (v.empty()) return {std::string(u)};
  std::set<std::string> out;
  for (const auto& w : shuffle_words(u.substr(1), v)) out.insert(u[0] + w);
  for (const auto& w : shuffle_words(u, v.substr(1))) out.insert(v[0] + w);
  return out;
}

std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    std::size_t end = out.size();
    if (alphabet.empty()) break;
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

std::optional<std::string> find_difference(const Dfa& a, const Dfa& b, std::size_t max_len) {
  require_same_alphabet(a, b);
  // Breadth-first over reachable state pairs gives a shortest witness.
  using Key = std::pair<Dfa::State, Dfa::State>;
  std::map<Key, std::string> seen{{{a.initial(), b.initial()}, ""}};
  std::deque<Key> queue{{a.initial(), b.initial()}};
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    const std::string w = seen[k];
    if (a.is_final(k.first) != b.is_final(k.second)) return w;
    if (w.size() == max_len) continue;
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
      Key n{a.next(k.first, l), b.next(k.second, l)};
      if (seen.emplace(n, w + a.alphabet()[l]).second) queue.push_back(n);
    }
  }
  return std::nullopt;
}

}  // namespace cclosure
