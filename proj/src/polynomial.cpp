#include "cclosure/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cclosure {

Polynomial Polynomial::monomial(NatVector exponent, BigInt coefficient) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

Polynomial Polynomial::constant(std::size_t k, BigInt c) { return monomial(NatVector(k), std::move(c)); }

BigInt Polynomial::coefficient(const NatVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const NatVector& e, const BigInt& c) {
  if (e.size() != k_) throw std::invalid_argument("monomial of wrong dimension");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("multiplying polynomials of different dimension");
  Polynomial r(a.k_);
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(k_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::times_binomial(const NatVector& beta) const {
  Polynomial r = *this;
  for (const auto& [e, c] : terms_) r.add_term(e + beta, -c);
  return r;
}

std::optional<Polynomial> poly_divide_exact(const Polynomial& num, const NatVector& beta) {
  if (beta.is_zero()) throw std::invalid_argument("division by 1 - x^0");
  if (beta.size() != num.dimension()) throw std::invalid_argument("binomial of wrong dimension");
  // Monomials on one line e + tβ form an independent problem: with a_t the
  // coefficients along the line, q_t is the prefix sum and the division is
  // exact iff the total sum vanishes.
  std::map<NatVector, std::map<NatVector::value_type, BigInt>> lines;
  for (const auto& [e, c] : num.terms()) {
    NatVector::value_type t = -1;
    for (std::size_t j = 0; j < beta.size(); ++j)
      if (beta[j] > 0) t = t < 0 ? e[j] / beta[j] : std::min(t, e[j] / beta[j]);
    NatVector base = e;
    for (std::size_t j = 0; j < beta.size(); ++j) base[j] -= t * beta[j];
    lines[base].emplace(t, c);
  }
  Polynomial q(num.dimension());
  for (const auto& [base, coeffs] : lines) {
    BigInt running = 0;
    auto t_end = coeffs.rbegin()->first;
    auto it = coeffs.begin();
    for (auto t = coeffs.begin()->first; t <= t_end; ++t) {
      if (it != coeffs.end() && it->first == t) running += (it++)->second;
      if (t < t_end) q.add_term(base + t * beta, running);
    }
    if (running != 0) return std::nullopt;
  }
  return q;
}

bool display_before(const NatVector& a, const NatVector& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return b < a;
}

std::vector<std::pair<NatVector, BigInt>> display_terms(const Polynomial& p) {
  std::vector<std::pair<NatVector, BigInt>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return display_before(l.first, r.first); });
  return out;
}

std::string variable_name(std::size_t j, std::size_t k) {
  if (k <= 3) return std::string(1, "xyz"[j]);
  return "x" + std::to_string(j + 1);
}

std::string monomial_string(const NatVector& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(j, e.size());
    if (e[j] > 1) s += "^" + std::to_string(e[j]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : display_terms(p)) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (e.is_zero())
      s += mag.str();
    else if (mag == 1)
      s += monomial_string(e);
    else
      s += mag.str() + "*" + monomial_string(e);
  }
  return s;
}

}  // namespace cclosure
