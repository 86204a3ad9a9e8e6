#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cclosure/diophantine.hpp"
#include "cclosure/lattice_region.hpp"
#include "cclosure/linear_set.hpp"
#include "cclosure/nat_vector.hpp"
#include "cclosure/rational_expr.hpp"

namespace cclosure {

enum class Check { Unknown, Yes, No };

std::string to_string(Check c);

// Finite union of linear sets of N^k. No terms denotes the empty set.
struct SemilinearSet {
  std::size_t dimension = 0;
  std::vector<LinearSet> terms;
  Check all_free = Check::Unknown;
  Check consistent = Check::Unknown;
  Check unambiguous = Check::Unknown;

  SemilinearSet() = default;
  explicit SemilinearSet(std::size_t k, std::vector<LinearSet> ts = {});
};

// Default bound D of the box ||σ|| <= D used by the unambiguity certificate.
inline constexpr NatVector::value_type kCertificateBound = 10;

struct SemilinearOptions {
  SolverLimits solver;
  RegionLimits region;
  std::size_t max_terms = 100'000;
  // Piece-against-term comparisons allowed in one disambiguation.
  std::size_t max_steps = 200'000;
  NatVector::value_type certificate_bound = kCertificateBound;
};

SemilinearSet to_semilinear(const RationalExpr& e);

bool member(const NatVector& sigma, const SemilinearSet& s);

// Union of linear sets with free bases denoting the same set as `t`.
SemilinearSet make_free(const LinearSet& t, const SemilinearOptions& opt = {});
SemilinearSet make_free(const SemilinearSet& s, const SemilinearOptions& opt = {});

// t1 ∩ t2 from the minimal solutions of γ1 + B1 n = γ2 + B2 m.
SemilinearSet intersect_linear(const LinearSet& t1, const LinearSet& t2, const SolverLimits& limits = {});
bool intersects(const LinearSet& t1, const LinearSet& t2, const SolverLimits& limits = {});

// Pairwise disjoint free terms denoting the same set. Requires free bases.
// Checks the unambiguity certificate on the box before returning; a set
// already flagged unambiguous is returned as is once the certificate holds.
SemilinearSet disambiguate(const SemilinearSet& s, const SemilinearOptions& opt = {});

// Replaces every j-primary basis element m e_j by p_j e_j, p_j the lcm of
// the j-primary coordinates present, splitting offsets over residues.
// Requires free bases; preserves freeness and disjointness.
SemilinearSet make_consistent(const SemilinearSet& s);
bool is_consistent(const SemilinearSet& s);

// Σ_terms (number of representations of σ) == [σ ∈ reference] for every σ
// with ||σ|| <= bound.
bool unambiguity_certificate(const SemilinearSet& s, const SemilinearSet& reference,
                             NatVector::value_type bound = kCertificateBound);
// Same check against the set itself.
bool unambiguity_certificate(const SemilinearSet& s, NatVector::value_type bound = kCertificateBound);

// Text form: terms joined by " | ", `#` for the empty set.
std::string to_string(const SemilinearSet& s);
// `empty_dimension` is the dimension given to "#".
SemilinearSet parse_semilinear(std::string_view text, std::size_t empty_dimension = 0);

}  // namespace cclosure
