#include "cclosure/series.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cclosure/errors.hpp"

namespace cclosure {

namespace {

constexpr std::size_t kMaxMonomials = 500'000;

void check_size(const Polynomial& p) {
  if (p.size() > kMaxMonomials)
    throw ResourceLimit("characteristic series numerator grew beyond " + std::to_string(kMaxMonomials) + " monomials");
}

}  // namespace

void FactoredDenominator::add(const NatVector& beta, std::size_t times) {
  if (beta.is_zero()) throw std::invalid_argument("denominator factor 1 - x^0");
  if (times) factors[beta] += times;
}

bool FactoredDenominator::remove_one(const NatVector& beta) {
  auto it = factors.find(beta);
  if (it == factors.end()) return false;
  if (--it->second == 0) factors.erase(it);
  return true;
}

std::size_t FactoredDenominator::count() const {
  std::size_t n = 0;
  for (const auto& [b, m] : factors) n += m;
  return n;
}

Polynomial FactoredDenominator::expand(std::size_t k) const {
  Polynomial p = Polynomial::constant(k, 1);
  for (const auto& [b, m] : factors)
    for (std::size_t i = 0; i < m; ++i) p = p.times_binomial(b);
  return p;
}

RationalFraction char_series(const SemilinearSet& s) {
  if (s.all_free != Check::Yes || s.unambiguous != Check::Yes || s.consistent != Check::Yes)
    throw InvariantError("characteristic series needs a free, unambiguous, consistent set (flags: free=" +
                         to_string(s.all_free) + ", unambiguous=" + to_string(s.unambiguous) +
                         ", consistent=" + to_string(s.consistent) + ")");
  const std::size_t k = s.dimension;
  RationalFraction f{Polynomial(k), {}};
  for (const auto& t : s.terms)
    for (const auto& b : t.basis()) {
      auto& m = f.denominator.factors[b];
      m = std::max<std::size_t>(m, 1);
    }
  // x^γ / Π_{b∈B}(1 - x^b) brought to the common denominator; terms sharing
  // a basis share the multiplier.
  std::map<std::vector<NatVector>, Polynomial> by_basis;
  for (const auto& t : s.terms) {
    auto [it, fresh] = by_basis.try_emplace(t.basis(), Polynomial(k));
    it->second += Polynomial::monomial(t.offset());
  }
  for (auto& [basis, p] : by_basis) {
    for (const auto& [beta, mult] : f.denominator.factors) {
      bool own = std::binary_search(basis.begin(), basis.end(), beta);
      for (std::size_t i = own ? 1 : 0; i < mult; ++i) {
        p = p.times_binomial(beta);
        check_size(p);
      }
    }
    f.numerator += p;
    check_size(f.numerator);
  }
  return f;
}

namespace {

bool multivariate(const NatVector& beta) {
  return std::count_if(beta.begin(), beta.end(), [](auto x) { return x != 0; }) >= 2;
}

}  // namespace

Decision simplify_and_decide(const RationalFraction& f) {
  Decision d{false, f, std::nullopt};
  Polynomial& p = d.fraction.numerator;
  FactoredDenominator& q = d.fraction.denominator;

  std::vector<std::pair<NatVector, std::size_t>> factors(f.denominator.factors.begin(), f.denominator.factors.end());
  for (const auto& [beta, mult] : factors) {
    if (!multivariate(beta)) continue;
    for (std::size_t i = 0; i < mult; ++i) {
      auto quotient = poly_divide_exact(p, beta);
      if (!quotient) {
        d.witness = beta;
        return d;
      }
      p = std::move(*quotient);
      q.remove_one(beta);
    }
  }
  for (const auto& [beta, mult] : factors) {
    if (multivariate(beta)) continue;
    for (std::size_t i = 0; i < mult; ++i) {
      auto quotient = poly_divide_exact(p, beta);
      if (!quotient) break;
      p = std::move(*quotient);
      q.remove_one(beta);
    }
  }
  d.recognizable = true;
  return d;
}

CoefficientTable expand_truncated(const RationalFraction& f, NatVector::value_type degree_cap) {
  CoefficientTable table;
  for (const auto& [e, c] : f.numerator.terms())
    if (e.total() <= degree_cap) table.emplace(e, c);
  for (const auto& [beta, mult] : f.denominator.factors) {
    for (std::size_t i = 0; i < mult; ++i) {
      // Multiply by 1 + x^β + x^{2β} + ... up to the cap.
      CoefficientTable next;
      for (const auto& [e, c] : table)
        for (NatVector m = e; m.total() <= degree_cap; m += beta) next[m] += c;
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      table = std::move(next);
    }
  }
  return table;
}

std::string to_string(const FactoredDenominator& d) {
  if (d.empty()) return "1";
  std::vector<NatVector> order;
  for (const auto& [b, m] : d.factors) order.push_back(b);
  std::sort(order.begin(), order.end(), display_before);
  std::vector<std::string> parts;
  for (const auto& b : order) {
    std::string f = "(1 - " + monomial_string(b) + ")";
    std::size_t m = d.factors.at(b);
    if (m > 1) f += "^" + std::to_string(m);
    parts.push_back(std::move(f));
  }
  if (parts.size() == 1) return parts.front();
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s + ")";
}

std::string to_string(const RationalFraction& f) {
  std::string num = to_string(f.numerator);
  if (f.numerator.size() > 1) num = "(" + num + ")";
  return num + " / " + to_string(f.denominator);
}

}  // namespace cclosure
