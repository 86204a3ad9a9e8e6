#pragma once

// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the basic value types.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cclosure/nat_vector.hpp"
#include "cclosure/regex.hpp"

namespace oracle {

using cclosure::NatVector;
using cclosure::RegexNode;

// Set of end positions reachable by matching `n` from position i.
inline std::set<std::size_t> match_from(const RegexNode& n, const std::string& w, std::size_t i) {
  switch (n.kind) {
    case RegexNode::Kind::EmptySet:
      return {};
    case RegexNode::Kind::EmptyWord:
      return {i};
    case RegexNode::Kind::Letter:
      if (i < w.size() && w[i] == n.letter) return {i + 1};
      return {};
    case RegexNode::Kind::Union: {
      auto a = match_from(*n.left, w, i);
      auto b = match_from(*n.right, w, i);
      a.insert(b.begin(), b.end());
      return a;
    }
    case RegexNode::Kind::Concat: {
      std::set<std::size_t> out;
      for (auto j : match_from(*n.left, w, i)) {
        auto r = match_from(*n.right, w, j);
        out.insert(r.begin(), r.end());
      }
      return out;
    }
    case RegexNode::Kind::Star: {
      std::set<std::size_t> out{i};
      std::vector<std::size_t> todo{i};
      while (!todo.empty()) {
        auto j = todo.back();
        todo.pop_back();
        for (auto e : match_from(*n.left, w, j))
          if (out.insert(e).second) todo.push_back(e);
      }
      return out;
    }
  }
  return {};
}

inline bool matches(const cclosure::RegexAst& ast, const std::string& w) {
  return match_from(ast.root(), w, 0).count(w.size()) > 0;
}

inline std::vector<std::string> words(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 0; len < max_len && !alphabet.empty(); ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

inline NatVector counts(const std::string& w, const std::string& alphabet) {
  NatVector v(alphabet.size());
  for (char c : w) ++v[alphabet.find(c)];
  return v;
}

// Parikh vectors of all words of L(ast) up to max_len, by the matcher.
inline std::set<NatVector> images(const cclosure::RegexAst& ast, std::size_t max_len) {
  std::set<NatVector> out;
  for (const auto& w : words(ast.alphabet(), max_len))
    if (matches(ast, w)) out.insert(counts(w, ast.alphabet()));
  return out;
}

// γ + B^⊕ membership by exhaustive coefficient search.
inline bool in_linear(const NatVector& sigma, const NatVector& offset, const std::vector<NatVector>& basis) {
  if (!sigma.dominates(offset)) return false;
  std::set<NatVector> seen{offset};
  std::vector<NatVector> todo{offset};
  while (!todo.empty()) {
    NatVector v = todo.back();
    todo.pop_back();
    if (v == sigma) return true;
    for (const auto& b : basis) {
      NatVector w = v + b;
      if (sigma.dominates(w) && seen.insert(w).second) todo.push_back(w);
    }
  }
  return false;
}

// Number of coefficient vectors n with offset + Σ n_i b_i = σ.
inline std::size_t count_representations(const NatVector& sigma, const NatVector& offset,
                                         const std::vector<NatVector>& basis, std::size_t i = 0) {
  if (!sigma.dominates(offset)) return 0;
  if (i == basis.size()) return sigma == offset ? 1 : 0;
  std::size_t total = 0;
  for (NatVector o = offset; sigma.dominates(o); o += basis[i]) {
    total += count_representations(sigma, o, basis, i + 1);
    if (basis[i].is_zero()) break;
  }
  return total;
}

// Exhaustive search for two distinct coefficient vectors (entries <= bound)
// with the same combination.
inline bool has_collision(const std::vector<NatVector>& basis, int bound) {
  if (basis.empty()) return false;
  const std::size_t k = basis.front().size();
  std::map<NatVector, int> seen;
  std::vector<int> n(basis.size(), 0);
  while (true) {
    NatVector v(k);
    for (std::size_t i = 0; i < basis.size(); ++i) v += static_cast<NatVector::value_type>(n[i]) * basis[i];
    if (++seen[v] > 1) return true;
    std::size_t i = 0;
    while (i < n.size() && n[i] == bound) n[i++] = 0;
    if (i == n.size()) return false;
    ++n[i];
  }
}

}  // namespace oracle
