#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cclosure/nat_vector.hpp"

namespace cclosure {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in k variables with integer coefficients. Zero
// coefficients are never stored; iteration is lexicographic on exponents.
class Polynomial {
 public:
  using Terms = std::map<NatVector, BigInt>;

  Polynomial() = default;
  explicit Polynomial(std::size_t k) : k_(k) {}
  static Polynomial monomial(NatVector exponent, BigInt coefficient = 1);
  static Polynomial constant(std::size_t k, BigInt c);

  std::size_t dimension() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const NatVector& e) const;
  void add_term(const NatVector& e, const BigInt& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // (1 - x^β) · this
  Polynomial times_binomial(const NatVector& beta) const;

 private:
  std::size_t k_ = 0;
  Terms terms_;
};

// q with num = (1 - x^β) q, if the division is exact.
std::optional<Polynomial> poly_divide_exact(const Polynomial& num, const NatVector& beta);

// Order used for printing: total degree ascending, then exponents
// descending lexicographically (x before y).
bool display_before(const NatVector& a, const NatVector& b);
std::vector<std::pair<NatVector, BigInt>> display_terms(const Polynomial& p);

// x, y, z for up to three variables, x1..xk beyond.
std::string variable_name(std::size_t j, std::size_t k);
std::string monomial_string(const NatVector& e);
std::string to_string(const Polynomial& p);

}  // namespace cclosure
