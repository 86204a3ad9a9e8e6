#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "cclosure/int_math.hpp"
#include "cclosure/nat_vector.hpp"
#include "cclosure/polynomial.hpp"
#include "cclosure/series.hpp"

namespace cclosure {

// S_h = d_h + {p_j e_j : j ∈ J}^⊕ counted with sign μ_h.
struct ResimpleTerm {
  Int mu = 0;
  NatVector offset;
};

// Set of term indices, bit h for S_h.
using ClassPattern = boost::dynamic_bitset<>;

// Finite abstraction of one coordinate: counts below `tail` are exact, the
// rest are kept modulo `period`.
struct Axis {
  Int tail = 0;
  Int period = 1;
  bool periodic = false;  // false: period 1 and state `tail` is a sink

  Int size() const { return tail + period; }
  Int state_of(Int n) const { return n < tail ? n : tail + (n - tail) % period; }
  Int successor(Int s) const { return s + 1 < size() ? s + 1 : tail; }
};

struct ResimpleLimits {
  std::size_t max_terms = 4096;
  std::size_t max_classes = 1'000'000;
};

class ResimpleSystem {
 public:
  std::size_t dimension() const { return periods_.size(); }
  // p_j, or 0 when j ∉ J.
  const std::vector<Int>& periods() const { return periods_; }
  const std::vector<ResimpleTerm>& terms() const { return terms_; }
  // Classes H that contain some σ, sorted; good ones have Σ_{h∈H} μ_h = 1.
  const std::vector<ClassPattern>& realized_classes() const { return realized_; }
  const std::vector<ClassPattern>& good_classes() const { return good_; }

  bool in_term(const NatVector& sigma, std::size_t h) const;
  // {h : σ ∈ S_h}
  ClassPattern pattern_of(const NatVector& sigma) const;
  Int coefficient_sum(const ClassPattern& h) const;

  // Axes of the grid construction: on each axis, membership of a count in
  // every S_h depends only on its state.
  std::vector<Axis> axes() const;
  // Bit h set iff a count in state s of axis j satisfies S_h's j-th condition.
  ClassPattern local_pattern(std::size_t j, const Axis& axis, Int s) const;

 private:
  friend ResimpleSystem build_system(const Polynomial&, const FactoredDenominator&, const ResimpleLimits&);
  std::vector<Int> periods_;
  std::vector<ResimpleTerm> terms_;
  std::vector<ClassPattern> realized_;
  std::vector<ClassPattern> good_;
};

// One term per monomial of P (in printing order). Q must consist of
// single-variable factors, at most one per coordinate; with Q = 1 every
// coefficient of P must be 1. Throws InvariantError when a realized class
// has a coefficient sum outside {0, 1}.
ResimpleSystem build_system(const Polynomial& p, const FactoredDenominator& q, const ResimpleLimits& limits = {});

bool class_nonempty(const ResimpleSystem& system, const ClassPattern& h);
bool member_system(const NatVector& sigma, const ResimpleSystem& system);

ClassPattern make_pattern(std::size_t m, const std::vector<std::size_t>& members);
// "{1,3}" with 1-based term numbers.
std::string to_string(const ClassPattern& h);
std::string to_string(const ResimpleSystem& system);

}  // namespace cclosure
