#include "cclosure/linear_set.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "cclosure/int_math.hpp"

namespace cclosure {

LinearSet::LinearSet(NatVector offset, std::vector<NatVector> basis)
    : offset_(std::move(offset)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != offset_.size()) throw std::invalid_argument("basis vector of wrong dimension");
  std::erase_if(basis_, [](const NatVector& b) { return b.is_zero(); });
  std::sort(basis_.begin(), basis_.end());
  basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
}

namespace {

// Counts solutions of Σ n_i b_i = rest over basis elements i >= from.
std::size_t count_from(const std::vector<NatVector>& basis, std::size_t from, const NatVector& rest,
                       bool first_only, std::map<std::pair<std::size_t, NatVector>, std::size_t>& memo) {
  if (rest.is_zero()) return 1;  // remaining coefficients all zero
  if (from == basis.size()) return 0;
  auto key = std::make_pair(from, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::size_t total = 0;
  NatVector cur = rest;
  const NatVector& b = basis[from];
  while (true) {
    total += count_from(basis, from + 1, cur, first_only, memo);
    if (first_only && total > 0) break;
    if (!cur.dominates(b)) break;
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= b[j];
  }
  memo.emplace(std::move(key), total);
  return total;
}

// For an independent basis: whether B n = rest has a solution in N^r,
// by Cramer's rule on r independent rows. Empty when B is dependent.
std::optional<bool> solve_free(const std::vector<NatVector>& basis, const NatVector& rest) {
  const std::size_t r = basis.size(), k = rest.size();
  if (r > k) return std::nullopt;
  IntMatrix picked;
  std::vector<std::size_t> rows;
  for (std::size_t l = 0; l < k && picked.size() < r; ++l) {
    IntVector row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = basis[i][l];
    picked.push_back(row);
    if (rank(picked) < picked.size())
      picked.pop_back();
    else
      rows.push_back(l);
  }
  if (picked.size() < r) return std::nullopt;
  const Int det = determinant(picked);
  const IntMatrix adj = adjugate(picked);
  IntVector n(r);
  for (std::size_t i = 0; i < r; ++i) {
    Int num = 0;
    for (std::size_t m = 0; m < r; ++m) num = checked_add(num, checked_mul(adj[i][m], rest[rows[m]]));
    if (num % det != 0) return false;
    n[i] = num / det;
    if (n[i] < 0) return false;
  }
  for (std::size_t l = 0; l < k; ++l) {
    Int v = 0;
    for (std::size_t i = 0; i < r; ++i) v = checked_add(v, checked_mul(n[i], basis[i][l]));
    if (v != rest[l]) return false;
  }
  return true;
}

}  // namespace

bool LinearSet::contains(const NatVector& sigma) const {
  if (sigma.size() != offset_.size() || !sigma.dominates(offset_)) return false;
  NatVector rest = sigma;
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= offset_[j];
  if (auto direct = solve_free(basis_, rest)) return *direct;
  std::map<std::pair<std::size_t, NatVector>, std::size_t> memo;
  return count_from(basis_, 0, rest, true, memo) > 0;
}

std::size_t LinearSet::representations(const NatVector& sigma) const {
  if (sigma.size() != offset_.size() || !sigma.dominates(offset_)) return 0;
  NatVector rest = sigma;
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= offset_[j];
  if (auto direct = solve_free(basis_, rest)) return *direct ? 1 : 0;
  std::map<std::pair<std::size_t, NatVector>, std::size_t> memo;
  return count_from(basis_, 0, rest, false, memo);
}

bool is_free(const std::vector<NatVector>& basis) {
  IntMatrix rows;
  for (const auto& b : basis) rows.emplace_back(b.begin(), b.end());
  return rank(rows) == basis.size();
}

std::string to_string(const LinearSet& t) {
  std::string s = to_string(t.offset());
  if (t.basis().empty()) return s;
  s += "+(";
  for (std::size_t i = 0; i < t.basis().size(); ++i) {
    if (i) s += "|";
    s += to_string(t.basis()[i]);
  }
  return s + ")+";
}

}  // namespace cclosure
