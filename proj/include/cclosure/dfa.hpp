#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cclosure/int_math.hpp"

namespace cclosure {

// Complete deterministic automaton. Transitions live in a dense table
// indexed by state * |alphabet| + letter position.
class Dfa {
 public:
  using State = std::size_t;

  Dfa(std::string alphabet, std::size_t states, std::vector<State> table, State initial, std::vector<bool> finals);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t size() const { return states_; }
  State initial() const { return initial_; }
  bool is_final(State s) const { return finals_[s]; }
  const std::vector<bool>& finals() const { return finals_; }
  State next(State s, std::size_t letter) const { return table_[s * alphabet_.size() + letter]; }
  const std::vector<State>& table() const { return table_; }
  // Position of `c` in the alphabet; AlphabetError if absent.
  std::size_t letter_index(char c) const;

 private:
  std::string alphabet_;
  std::size_t states_;
  std::vector<State> table_;
  State initial_;
  std::vector<bool> finals_;
};

bool accepts(const Dfa& d, std::string_view word);

// Every state has exactly one successor per letter, all in range, and the
// initial state exists.
bool is_complete_deterministic(const Dfa& d);

// Reachable part renumbered breadth-first from the initial state, letters
// in alphabet order.
Dfa renumber(const Dfa& d);

// Automaton over {letter} with states 0..tail+period-1 counting
// occurrences; the last state steps back to `tail`.
Dfa counter(char letter, Int tail, Int period, const std::function<bool(Int)>& accept_state);

// Asynchronous product over pairwise disjoint alphabets.
Dfa shuffle_product(const std::vector<Dfa>& parts);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& d);
// Single non-accepting state.
Dfa empty_dfa(std::string alphabet);

// Moore partition refinement on the reachable part.
Dfa minimize(const Dfa& d);

std::string export_dot(const Dfa& d);
std::string export_json(const Dfa& d);

// All interleavings of two words.
std::set<std::string> shuffle_words(std::string_view u, std::string_view v);

// Every word over `alphabet` of length <= max_len, shortest first.
std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_len);

// A word of length <= max_len accepted by exactly one of the automata.
std::optional<std::string> find_difference(const Dfa& a, const Dfa& b, std::size_t max_len);

}  // namespace cclosure
