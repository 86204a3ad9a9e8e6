#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "cclosure/polynomial.hpp"
#include "cclosure/semilinear.hpp"

namespace cclosure {

// Product of binomials (1 - x^β), stored as β -> multiplicity.
struct FactoredDenominator {
  std::map<NatVector, std::size_t> factors;

  void add(const NatVector& beta, std::size_t times = 1);
  // Removes one occurrence; returns false if β is absent.
  bool remove_one(const NatVector& beta);
  std::size_t count() const;  // with multiplicity
  bool empty() const { return factors.empty(); }
  Polynomial expand(std::size_t k) const;

  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;
};

struct RationalFraction {
  Polynomial numerator;
  FactoredDenominator denominator;

  std::size_t dimension() const { return numerator.dimension(); }
};

// Generating series Σ_{σ∈S} x^σ of a free, unambiguous, consistent set as
// one fraction over the common denominator. Throws InvariantError when the
// flags of `s` are not established.
RationalFraction char_series(const SemilinearSet& s);

struct Decision {
  bool recognizable = false;
  // Reduced fraction, or the state reached when a division failed.
  RationalFraction fraction;
  std::optional<NatVector> witness;  // exponent of the factor that did not divide
};

// Divides the numerator by every multivariate factor (per occurrence,
// factors in lexicographic order), then by whole single-variable factors
// where the division happens to be exact.
Decision simplify_and_decide(const RationalFraction& f);

using CoefficientTable = std::map<NatVector, BigInt>;

// Coefficients of every monomial of total degree <= degree_cap (zeros
// omitted).
CoefficientTable expand_truncated(const RationalFraction& f, NatVector::value_type degree_cap);

std::string to_string(const FactoredDenominator& d);
// "(x + y - x*y) / ((1 - x)*(1 - y))"
std::string to_string(const RationalFraction& f);

}  // namespace cclosure
